#include <iostream>

#include "perfcode/cli.hpp"

int main(int argc, char** argv) { return perfcode::cli_main(argc, argv, std::cout, std::cerr); }

#include "perfcode/budget.hpp"

#include <cstdlib>
#include <string>

namespace perfcode {

Budget Budget::seconds(double s) {
  Budget b;
  b.deadline_ = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(s));
  return b;
}

Budget Budget::from_env() {
  const char* value = std::getenv("PERFCODE_BUDGET_SECONDS");
  if (value == nullptr) return unlimited();
  try {
    const double s = std::stod(value);
    if (s > 0) return seconds(s);
  } catch (const std::exception&) {
  }
  return unlimited();
}

}  // namespace perfcode

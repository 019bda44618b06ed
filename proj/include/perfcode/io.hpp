#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "perfcode/classify.hpp"
#include "perfcode/codes.hpp"
#include "perfcode/regular_groups.hpp"
#include "perfcode/sqs.hpp"

namespace perfcode {

// All readers throw MalformedInput on syntax or range errors.

/// {"r": 3, "perm": [0, 1, ...]}
std::string tau_json(const PointPerm& tau);
PointPerm parse_tau_json(const std::string& text);

/// {"r": 3, "mats": {"0": ["100", "010", "001"], ...}}; row strings start at column 1.
std::string group_json(const RegularSubgroup& g);
RegularSubgroup parse_group_json(const std::string& text);
/// A JSON array of groups, one per line.
void write_groups(std::ostream& out, const std::vector<RegularSubgroup>& groups);

/// [{"tau": [...], "r": 3, "group_id": 0, "aut_id": 0}, ...], one entry per line.
void write_catalog(std::ostream& out, const TauCatalog& catalog);
/// Entries without group_id/aut_id are tagged as user input.
std::vector<TaggedTau> read_catalog(std::istream& in);

void write_entries_json(std::ostream& out, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_entries_json(std::istream& in);
/// Header then one row per entry; aut_order is empty when unknown.
void write_entries_csv(std::ostream& out, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_entries_csv(std::istream& in);

/// Contents of a code file: either explicit words or generators plus coset representatives.
struct CodeFile {
  std::size_t length = 0;
  int log_size = 0;
  std::vector<BitWord> words;
  std::vector<BitWord> generators;
  std::vector<BitWord> representatives;
};

/// "n=<length> k=<log2 size>", then "G" and generator rows (and "R" with coset
/// representatives for a union of cosets), or the codewords themselves.
void write_code(std::ostream& out, const LinearCode& code);
void write_code(std::ostream& out, const CosetUnionCode& code);
void write_code(std::ostream& out, const ExplicitCode& code);
CodeFile read_code(std::istream& in);

/// "v=<order> b=<count>" then one ascending quadruple per line, lines sorted.
void write_sqs(std::ostream& out, const Sqs& q);
/// Sets `declared_count_mismatch` when b= differs from the number of lines read.
Sqs read_sqs(std::istream& in, bool& declared_count_mismatch);

std::string read_file(const std::string& path);

}  // namespace perfcode

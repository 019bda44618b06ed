#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfcode/budget.hpp"
#include "perfcode/general_linear.hpp"

namespace perfcode {

/// Where a permutation came from. Catalog and product permutations are regular-subgroup induced.
struct Provenance {
  enum class Kind { Catalog, Product, User };

  Kind kind = Kind::User;
  std::uint32_t group_id = 0;
  std::uint32_t aut_id = 0;

  static Provenance catalog(std::uint32_t group_id, std::uint32_t aut_id) { return {Kind::Catalog, group_id, aut_id}; }
  static Provenance product() { return {Kind::Product, 0, 0}; }
  static Provenance user() { return {}; }

  bool induced() const { return kind != Kind::User; }
  /// "<group_id>:<aut_id>", "product" or "user".
  std::string to_string() const;
  /// Throws MalformedInput.
  static Provenance parse(const std::string& text);

  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

struct TaggedTau {
  PointPerm tau;
  Provenance provenance;
};

struct CatalogEntry {
  std::string tau_id;
  int r = 0;
  int rank = 0;
  int kernel_dim = 0;
  int intersection_dim = 0;
  bool point_transitive = false;
  /// Empty when not computed (series members with r >= 6).
  std::optional<std::uint64_t> aut_order;
  std::uint32_t class_id = 0;
  /// Sufficient condition only; false means "unknown".
  bool non_mollard = false;
  Provenance provenance;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct ClassifyOptions {
  unsigned parallel = 1;
  Budget budget;
};

/// Isomorphism classes of SQS_tau over a list of zero-fixing permutations of one F^r, r <= 5.
///
/// Duplicated permutations are merged (least provenance kept). Entries come back sorted by tau;
/// classes are numbered from 0 in the order of their least tau. Permutations are merged when
/// their class keys agree, and distinct keys with equal invariants (rank, kernel, intersection,
/// aut order) are compared with sqs_isomorphic. Throws DimensionMismatch, ZeroNotFixed,
/// BudgetExceeded.
std::vector<CatalogEntry> classify(const std::vector<TaggedTau>& taus, const ClassifyOptions& options = {});

/// 2^{r+1} - 2r - 2
int minimal_kernel_dim(int r);

struct TransitivityReport {
  bool coordinate_transitive = false;
  /// Transitivity of S_tau follows from propelinearity, known only for induced permutations.
  bool transitive_verified = false;
  bool neighbor_transitive = false;
  std::string reason;
};

TransitivityReport transitivity_report(const TaggedTau& t);

/// Provenance of the first (G, T) in enumeration order with T = tau, r <= 4; nullopt when tau is
/// not induced. Throws BudgetExceeded.
std::optional<Provenance> find_inducing_automorphism(const PointPerm& tau, const Budget& budget = {});

struct SeriesMember {
  PointPerm tau;
  /// Dimensions of the factors, low coordinates first.
  std::vector<int> parts;
  std::vector<PointPerm> factors;
  /// tau^{-1} = b o tau o a^{-1}, assembled from the factor witnesses.
  DoubleCosetWitness witness;
  TransitivityReport report;
  CatalogEntry entry;
};

/// Neighbor transitive non-Mollard S_tau of length 2^{r+1}, tau a product of induced factors on
/// F^3 and F^4. Requires 3 <= r <= 9 and r != 5 (ExcludedLength).
SeriesMember series_theorem7(int r);

/// An induced tau on F^r with trivial linear structure set: the least one in the r = 3 catalog,
/// the least one from the first regular subgroup that has one at r = 4.
TaggedTau series_base(int r);

}  // namespace perfcode

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "perfcode/budget.hpp"
#include "perfcode/point_perm.hpp"

namespace perfcode {

/// Regular subgroup of GA(r,2); element g_a = (a, M_a) is the unique element sending 0 to a.
struct RegularSubgroup {
  int r = 0;
  std::vector<LinearMap> mats;

  static RegularSubgroup translations(int r);

  std::size_t order() const { return mats.size(); }
  /// Label of g_a g_b, namely a + M_a b.
  Point multiply(Point a, Point b) const { return a ^ mats[a](b); }

  friend bool operator==(const RegularSubgroup&, const RegularSubgroup&) = default;
};

struct RegularViolation {
  Point a = 0;
  Point b = 0;
  std::string reason;
};

/// Checks |G| = 2^r, M_0 = I, invertibility and M_{a + M_a b} = M_a M_b for all pairs.
std::optional<RegularViolation> verify_regular(const RegularSubgroup& g);

/// Streams every regular subgroup of GA(r,2) exactly once, 1 <= r <= 4, in a fixed order.
///
/// Depth-first: branch on the least unassigned label p over the candidate matrices X for which
/// (p, X) has 2-power order and no power with a fixed point, then close the assigned set under
/// multiplication. Returns false when the budget ran out or `visit` returned false.
bool enumerate_regular_subgroups(int r, const std::function<bool(const RegularSubgroup&)>& visit,
                                 const Budget& budget = Budget::unlimited());

struct RegularEnumeration {
  std::vector<RegularSubgroup> groups;
  bool complete = true;
};

RegularEnumeration enumerate_regular_subgroups(int r, const Budget& budget = Budget::unlimited());

/// Automorphism T of G written on element labels: T(g_a) = g_{T(a)}.
using GroupAutomorphism = PointPerm;

/// Every automorphism of G, |G| <= 16. Generators are the least labels outside the subgroup
/// generated so far; their images range over elements of equal order.
std::vector<GroupAutomorphism> automorphisms(const RegularSubgroup& g);

/// Whether t preserves the multiplication table of G.
bool is_automorphism(const RegularSubgroup& g, const PointPerm& t);

/// tau(a) = label of T(g_a). Throws NotAnAutomorphism.
PointPerm induced_tau(const RegularSubgroup& g, const GroupAutomorphism& t);

struct CatalogTau {
  PointPerm tau;
  std::uint32_t group_id = 0;
  std::uint32_t aut_id = 0;
};

struct TauCatalog {
  int r = 0;
  /// Distinct induced permutations sorted by tau; provenance is the first (G, T) in stream order.
  std::vector<CatalogTau> entries;
  bool complete = true;
  std::uint64_t groups = 0;
  std::uint64_t pairs = 0;
};

/// All tau induced by automorphisms of regular subgroups, r in {3, 4} (also 1, 2).
TauCatalog catalog_taus(int r, const Budget& budget = Budget::unlimited());

}  // namespace perfcode

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "perfcode/point_perm.hpp"

namespace perfcode {

/// |GL(r,2)| = prod_{i<r} (2^r - 2^i).
std::uint64_t gl_order(int r);

/// Calls `visit` on every invertible r x r matrix, in increasing row_major_code() order.
/// Stops early when `visit` returns false; returns true when the sweep completed.
/// Throws BudgetExceeded for r > 6.
bool gl_enumerate(int r, const std::function<bool(const LinearMap&)>& visit);

/// Materialized GL(r,2) for r <= 4 (cached, enumeration order).
const std::vector<LinearMap>& gl_list(int r);

enum class CosetGroup { GL, GA };

/// Witness for target = b o tau o a^{-1}. For CosetGroup::GL both shifts are zero.
struct DoubleCosetWitness {
  AffineMap a;
  AffineMap b;
};

/// Decides target in G tau G for G = GL(r,2) or GA(r,2), r <= 5.
///
/// Sweeps a over G in enumeration order and derives b = target o a o tau^{-1}; the
/// candidate is accepted only if it is linear (affine) at all 2^r points. The first
/// witness found is returned. GL requires both permutations to fix zero.
std::optional<DoubleCosetWitness> double_coset_member(const PointPerm& target, const PointPerm& tau,
                                                      CosetGroup group = CosetGroup::GL);

/// Pointwise check of target = b o tau o a^{-1}.
bool verify_double_coset(const PointPerm& target, const PointPerm& tau, const DoubleCosetWitness& w);

/// Lexicographically least element of GL(r,2) tau GL(r,2), with a witness mapping tau onto it.
struct CanonicalForm {
  PointPerm form;
  DoubleCosetWitness witness;
};

/// Exact canonical representative of the GL double coset of a zero-fixing tau, r <= 5.
///
/// The right factor is chosen column by column: the images of points in
/// [2^{k-1}, 2^k) depend only on the first k columns, and for a fixed right factor the
/// best left factor is the greedy basis normalization. All prefix ties are kept.
CanonicalForm gl_canonical_form(const PointPerm& tau);

}  // namespace perfcode

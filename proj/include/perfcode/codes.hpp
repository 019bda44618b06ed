#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "perfcode/bit_matrix.hpp"
#include "perfcode/point_perm.hpp"

namespace perfcode {

/// Permutation of coordinate positions; pi(y) moves coordinate i of y to position images[i].
class CoordinatePerm {
 public:
  CoordinatePerm() = default;
  /// Throws MalformedInput unless `images` is a permutation of [0, n).
  explicit CoordinatePerm(std::vector<std::uint32_t> images);

  static CoordinatePerm identity(std::size_t n);
  /// Positions indexed by the points of F^r, permuted by tau.
  static CoordinatePerm from_point_perm(const PointPerm& tau);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  BitWord apply(const BitWord& y) const;

  friend bool operator==(const CoordinatePerm&, const CoordinatePerm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (outer o inner)
CoordinatePerm compose(const CoordinatePerm& outer, const CoordinatePerm& inner);

/// Binary linear code given by a generator matrix (rows span the code, not necessarily independent).
struct LinearCode {
  std::size_t length = 0;
  BitMatrix generators;

  std::size_t dimension() const { return rank(generators); }
  bool contains(const BitWord& x) const;
  /// Basis of the dual code.
  BitMatrix parity_check() const { return null_space(generators); }
};

/// {x : sum of the points in supp(x) is 0, wt(x) even}, coordinates indexed by F^r.
LinearCode extended_hamming(int r);

/// C intersected with D, via the stacked parity checks. Throws DimensionMismatch.
LinearCode intersect(const LinearCode& c, const LinearCode& d);

/// C x D = {x|y}.
LinearCode direct_product(const LinearCode& c, const LinearCode& d);

/// Coordinates of C permuted by tau acting on positions indexed by F^r.
LinearCode apply_point_perm_to_code(const PointPerm& tau, const LinearCode& c);

/// L_tau = {a : tau(a+b) = tau(a) + tau(b) for all b}, in increasing order. Throws ZeroNotFixed.
std::vector<Point> linear_structure_set(const PointPerm& tau);

/// Sorted, duplicate-free list of codewords of one length.
class ExplicitCode {
 public:
  ExplicitCode() = default;
  ExplicitCode(std::size_t length, std::vector<BitWord> words);

  std::size_t length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<BitWord>& words() const { return words_; }
  bool contains(const BitWord& x) const;

  friend bool operator==(const ExplicitCode&, const ExplicitCode&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<BitWord> words_;
};

/// Union of the cosets base + reps[a] over all points a of F^r.
struct CosetUnionCode {
  int r = 0;
  LinearCode base;
  std::vector<BitWord> reps;

  std::size_t length() const { return base.length; }
};

/// (e_a + e_0 | e_image + e_0), the representative of coset a in S_tau when image = tau(a).
BitWord coset_representative(int r, Point a, Point image);

struct CodeStats {
  int rank = 0;
  int kernel_dim = 0;
  int min_distance = 0;
  std::uint64_t size = 0;

  friend bool operator==(const CodeStats&, const CodeStats&) = default;
};

/// Rank, kernel dimension and size of S_tau from the coset structure, without materializing it.
///
/// rank = dim(H x H) + dim span{(a | tau(a))}, kernel = dim(H x H) + dim L_tau,
/// min distance 4. Throws InconsistentInput when the representatives do not match tau.
CodeStats stats_coset_union(const CosetUnionCode& s, const PointPerm& tau);

/// The same numbers computed from tau alone (no generator matrix), for r up to 16.
CodeStats stats_from_tau(const PointPerm& tau);

/// dim(tau(H) n H) for H = extended_hamming(r): 2^r minus the rank of the stacked parity checks.
int intersection_dim(const PointPerm& tau);

/// Every codeword of `s`; throws BudgetExceeded above 2^21 words.
ExplicitCode explicit_materialize(const CosetUnionCode& s);
ExplicitCode explicit_materialize(const LinearCode& c);

int brute_rank(const ExplicitCode& e);
/// Dimension of {x in E : x + E = E}.
int brute_kernel_dim(const ExplicitCode& e);
/// Minimum over all pairs of distinct codewords; 0 for codes with fewer than two words.
int brute_min_distance(const ExplicitCode& e);

}  // namespace perfcode

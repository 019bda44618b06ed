#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "perfcode/codes.hpp"
#include "perfcode/general_linear.hpp"

namespace perfcode {

using Quadruple = std::array<Point, 4>;
using Triple = std::array<Point, 3>;

/// A family of 4-subsets of [0, v). Each quadruple is stored ascending and the list is sorted.
class Sqs {
 public:
  Sqs() = default;
  /// Throws MalformedInput on out-of-range or repeated points.
  Sqs(std::size_t order, std::vector<Quadruple> quadruples);

  std::size_t order() const { return order_; }
  std::size_t size() const { return quads_.size(); }
  const std::vector<Quadruple>& quadruples() const { return quads_; }
  bool contains(Quadruple q) const;

  friend bool operator==(const Sqs&, const Sqs&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Quadruple> quads_;
};

/// Left points of SQS_tau are [0, 2^r), right points [2^r, 2^{r+1}).
inline Point left_point(int, Point a) { return a; }
inline Point right_point(int r, Point a) { return (Point{1} << r) + a; }

/// Q_0 u Q_1 u Q_tau. Throws ZeroNotFixed; r <= 5.
Sqs sqs_from_tau(const PointPerm& tau);

/// First triple (in lexicographic order) not covered exactly once, or nullopt for a valid SQS.
std::optional<Triple> validate_sqs(const Sqs& q);

/// Supports of the weight-4 words of an explicit code of length v.
Sqs weight_four_supports(const ExplicitCode& code);

struct Lemma1Report {
  /// Pairs of distinct quadruples from some Q_0(a,b) or Q_1(a,b) that were examined.
  std::size_t same_side_pairs = 0;
  /// Such pairs whose symmetric difference is not a quadruple.
  std::vector<std::pair<Quadruple, Quadruple>> counterexamples;
  /// (a, b) for which Q_tau(a,b) has no pair with symmetric difference outside the system.
  std::vector<std::pair<Point, Point>> missing_witnesses;

  bool holds() const { return counterexamples.empty() && missing_witnesses.empty(); }
};

/// Checks both parts of the quadruple-pair dichotomy for a non-linear tau. Throws AffineInput.
Lemma1Report lemma1_check(const PointPerm& tau);

/// (sigma_{a,A} | sigma_{b,B}) o xi^t: swap sides when `swap`, then relabel the left points by
/// `left` and the right points by `right`.
struct StructuredPerm {
  AffineMap left;
  AffineMap right;
  bool swap = false;

  static StructuredPerm identity(int r) { return {AffineMap::identity(r), AffineMap::identity(r), false}; }
  Point operator()(Point p) const;
};

Sqs apply_structured(const StructuredPerm& pi, const Sqs& q);
/// Exchanges left and right points; maps SQS_tau onto SQS_{tau^{-1}}.
Sqs xi_swap(const Sqs& q);

/// A structured map (zero shifts) carrying SQS_tau onto SQS_other, or nullopt.
///
/// t = 0 when other = B tau A^{-1}, t = 1 when other = B tau^{-1} A^{-1}. Two linear
/// permutations are always isomorphic; exactly one linear input gives nullopt.
std::optional<StructuredPerm> sqs_isomorphic(const PointPerm& tau, const PointPerm& other);

/// Canonical representative of the isomorphism class of SQS_tau: the lesser of the GL
/// double coset canonical forms of tau and tau^{-1}. Equal keys iff sqs_isomorphic.
PointPerm sqs_class_key(const PointPerm& tau);

struct PointTransitivity {
  bool transitive = false;
  /// tau^{-1} = b o tau o a^{-1}; empty for linear tau.
  std::optional<DoubleCosetWitness> witness;
};

PointTransitivity point_transitive(const PointPerm& tau);

/// |Aut(SQS_tau)|. Linear tau: 2^{r+1} |GL(r+1,2)|; otherwise 2^{2r} (N_0 + N_1).
std::uint64_t aut_order(const PointPerm& tau);

/// The linear parts (A, B, t) of the automorphisms of SQS_tau for non-linear tau; the full group
/// adds all translation pairs. Throws AffineInput.
std::vector<StructuredPerm> structured_automorphisms(const PointPerm& tau);

}  // namespace perfcode

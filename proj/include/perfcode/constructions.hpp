#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "perfcode/codes.hpp"
#include "perfcode/general_linear.hpp"

namespace perfcode {

/// S_tau = union over a of (H + e_a + e_0) x (H + e_tau(a) + e_0), H = extended_hamming(r).
///
/// Requires tau(0) = 0 and 3 <= r <= 5.
CosetUnionCode build_s_tau(const PointPerm& tau);

/// (tau|tau')(x|y) = tau(x)|tau'(y); the low r bits of a combined point hold x.
PointPerm tau_product(const PointPerm& first, const PointPerm& second);

/// phi : C -> F^m. An empty function stands for phi = 0.
using MollardMap = std::function<BitWord(const BitWord&)>;

/// Extended Mollard code M(C, D) of length t*m; coordinate (row, col) is index row*m + col.
class MollardCode {
 public:
  MollardCode(ExplicitCode c, ExplicitCode d, MollardMap phi = {});

  std::size_t t() const { return c_.length(); }
  std::size_t m() const { return d_.length(); }
  std::size_t length() const { return t() * m(); }
  const ExplicitCode& outer() const { return c_; }
  const ExplicitCode& inner() const { return d_; }

  /// Row sums (length t).
  BitWord p1(const BitWord& z) const;
  /// Column sums (length m).
  BitWord p2(const BitWord& z) const;
  BitWord phi(const BitWord& x) const;

  bool contains(const BitWord& z) const;
  /// |C| * |D| * 2^{tm - t - m + 1}
  std::uint64_t expected_size() const;
  /// All codewords, built from row/column sums; throws BudgetExceeded when tm > 20.
  ExplicitCode materialize() const;

 private:
  ExplicitCode c_;
  ExplicitCode d_;
  MollardMap phi_;
};

MollardCode mollard(ExplicitCode c, ExplicitCode d, MollardMap phi = {});

/// Dub_1(pi)(r, s) = (pi(r), s)
CoordinatePerm dub1(const MollardCode& code, const CoordinatePerm& pi);
/// Dub_2(pi')(r, s) = (r, pi'(s))
CoordinatePerm dub2(const MollardCode& code, const CoordinatePerm& pi);

/// Hadamard analog A_tau = union over a of C_a x C_tau(a).
struct HadamardCode {
  int r = 0;
  PointPerm tau;
  ExplicitCode words;
};

/// Word of length 2^r with support {x : <x, a> = 1}.
BitWord half_space_word(int r, Point a);
/// C_a = {support {x : <x,a> = 0}, support {x : <x,a> = 1}}.
ExplicitCode half_space_pair(int r, Point a);

/// Requires tau(0) = 0 and r <= 4.
HadamardCode hadamard_a_tau(const PointPerm& tau);

/// y -> shift + perm(y)
struct CodeIsometry {
  BitWord shift;
  CoordinatePerm perm;

  BitWord operator()(const BitWord& y) const { return shift ^ perm.apply(y); }
};

/// An isometry of F^{2^{r+1}} carrying A_tau onto A_other, built from a GA(r,2) double coset
/// witness for other in GA tau GA or GA tau^{-1} GA; nullopt when neither holds.
std::optional<CodeIsometry> hadamard_isomorphism(const PointPerm& tau, const PointPerm& other);

}  // namespace perfcode

#include "perfcode/constructions.hpp"

#include <bit>
#include <utility>

#include "perfcode/errors.hpp"

namespace perfcode {

CosetUnionCode build_s_tau(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  const int r = tau.dim();
  if (r < 3) throw DimensionMismatch("S_tau needs r >= 3");
  if (r > 5) throw BudgetExceeded("S_tau is limited to r <= 5");
  const LinearCode h = extended_hamming(r);
  CosetUnionCode s{r, direct_product(h, h), {}};
  s.reps.reserve(tau.size());
  for (Point a = 0; a < tau.size(); ++a) s.reps.push_back(coset_representative(r, a, tau(a)));
  return s;
}

PointPerm tau_product(const PointPerm& first, const PointPerm& second) {
  const int r1 = first.dim();
  const int r = r1 + second.dim();
  if (r > LinearMap::kMaxDim) throw BudgetExceeded("product dimension too large");
  const Point low = (Point{1} << r1) - 1;
  std::vector<Point> images(std::size_t{1} << r);
  for (std::size_t z = 0; z < images.size(); ++z) {
    const auto p = static_cast<Point>(z);
    images[z] = first(p & low) | (second(p >> r1) << r1);
  }
  return PointPerm(r, std::move(images));
}

MollardCode::MollardCode(ExplicitCode c, ExplicitCode d, MollardMap phi)
    : c_(std::move(c)), d_(std::move(d)), phi_(std::move(phi)) {}

MollardCode mollard(ExplicitCode c, ExplicitCode d, MollardMap phi) {
  return MollardCode(std::move(c), std::move(d), std::move(phi));
}

BitWord MollardCode::p1(const BitWord& z) const {
  if (z.size() != length()) throw DimensionMismatch("word length differs from Mollard code length");
  BitWord out(t());
  for (std::size_t row = 0; row < t(); ++row) {
    bool sum = false;
    for (std::size_t col = 0; col < m(); ++col) sum ^= z.test(row * m() + col);
    out.set(row, sum);
  }
  return out;
}

BitWord MollardCode::p2(const BitWord& z) const {
  if (z.size() != length()) throw DimensionMismatch("word length differs from Mollard code length");
  BitWord out(m());
  for (std::size_t col = 0; col < m(); ++col) {
    bool sum = false;
    for (std::size_t row = 0; row < t(); ++row) sum ^= z.test(row * m() + col);
    out.set(col, sum);
  }
  return out;
}

BitWord MollardCode::phi(const BitWord& x) const {
  if (!phi_) return BitWord(m());
  BitWord y = phi_(x);
  if (y.size() != m()) throw DimensionMismatch("phi must map into F^m");
  return y;
}

bool MollardCode::contains(const BitWord& z) const {
  const BitWord outer_sums = p1(z);
  if (!c_.contains(outer_sums)) return false;
  return d_.contains(p2(z) ^ phi(outer_sums));
}

std::uint64_t MollardCode::expected_size() const {
  const std::size_t free_bits = t() * m() - t() - m() + 1;
  return c_.size() * d_.size() * (std::uint64_t{1} << free_bits);
}

ExplicitCode MollardCode::materialize() const {
  const std::size_t t_ = t();
  const std::size_t m_ = m();
  if (t_ * m_ > 20) throw BudgetExceeded("Mollard materialization needs tm <= 20");
  if (t_ == 0 || m_ == 0) return ExplicitCode(length(), {});
  // The (t-1) x (m-1) block is free; the last column and last row are fixed by the
  // prescribed row sums u and column sums v, and need parity(u) = parity(v).
  const std::size_t free_bits = (t_ - 1) * (m_ - 1);
  std::vector<BitWord> words;
  for (const auto& u : c_.words()) {
    const BitWord shift = phi(u);
    for (const auto& d : d_.words()) {
      const BitWord v = d ^ shift;
      if ((u.weight() & 1U) != (v.weight() & 1U)) continue;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_bits); ++bits) {
        BitWord z(length());
        for (std::size_t row = 0; row + 1 < t_; ++row)
          for (std::size_t col = 0; col + 1 < m_; ++col)
            if ((bits >> (row * (m_ - 1) + col)) & 1U) z.set(row * m_ + col);
        for (std::size_t row = 0; row + 1 < t_; ++row) {
          bool sum = u.test(row);
          for (std::size_t col = 0; col + 1 < m_; ++col) sum ^= z.test(row * m_ + col);
          z.set(row * m_ + m_ - 1, sum);
        }
        for (std::size_t col = 0; col < m_; ++col) {
          bool sum = v.test(col);
          for (std::size_t row = 0; row + 1 < t_; ++row) sum ^= z.test(row * m_ + col);
          z.set((t_ - 1) * m_ + col, sum);
        }
        words.push_back(z);
      }
    }
  }
  return ExplicitCode(length(), std::move(words));
}

CoordinatePerm dub1(const MollardCode& code, const CoordinatePerm& pi) {
  if (pi.size() != code.t()) throw DimensionMismatch("Dub_1 needs a permutation of the outer coordinates");
  std::vector<std::uint32_t> images(code.length());
  for (std::size_t row = 0; row < code.t(); ++row)
    for (std::size_t col = 0; col < code.m(); ++col)
      images[row * code.m() + col] = static_cast<std::uint32_t>(pi(static_cast<std::uint32_t>(row)) * code.m() + col);
  return CoordinatePerm(std::move(images));
}

CoordinatePerm dub2(const MollardCode& code, const CoordinatePerm& pi) {
  if (pi.size() != code.m()) throw DimensionMismatch("Dub_2 needs a permutation of the inner coordinates");
  std::vector<std::uint32_t> images(code.length());
  for (std::size_t row = 0; row < code.t(); ++row)
    for (std::size_t col = 0; col < code.m(); ++col)
      images[row * code.m() + col] = static_cast<std::uint32_t>(row * code.m() + pi(static_cast<std::uint32_t>(col)));
  return CoordinatePerm(std::move(images));
}

BitWord half_space_word(int r, Point a) {
  const std::size_t n = std::size_t{1} << r;
  BitWord w(n);
  for (std::size_t x = 0; x < n; ++x)
    if (std::popcount(static_cast<Point>(x) & a) & 1) w.set(x);
  return w;
}

ExplicitCode half_space_pair(int r, Point a) {
  const BitWord w = half_space_word(r, a);
  return ExplicitCode(w.size(), {w, w ^ BitWord::ones(w.size())});
}

HadamardCode hadamard_a_tau(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  const int r = tau.dim();
  if (r > 4) throw BudgetExceeded("Hadamard analog is limited to r <= 4");
  std::vector<BitWord> words;
  words.reserve(tau.size() * 4);
  for (Point a = 0; a < tau.size(); ++a) {
    const ExplicitCode left = half_space_pair(r, a);
    const ExplicitCode right = half_space_pair(r, tau(a));
    for (const auto& x : left.words())
      for (const auto& y : right.words()) words.push_back(concat(x, y));
  }
  const std::size_t n = std::size_t{2} << r;
  return {r, tau, ExplicitCode(n, std::move(words))};
}

namespace {

// (sigma_left | sigma_right) on 2^{r+1} positions. sigma_M carries C_b to C_{M^{-T} b}.
CoordinatePerm halves(const LinearMap& left, const LinearMap& right) {
  const int r = left.dim();
  const std::size_t half = std::size_t{1} << r;
  std::vector<std::uint32_t> images(2 * half);
  for (std::size_t x = 0; x < half; ++x) {
    images[x] = left(static_cast<Point>(x));
    images[half + x] = static_cast<std::uint32_t>(half + right(static_cast<Point>(x)));
  }
  return CoordinatePerm(std::move(images));
}

CoordinatePerm swap_halves(int r) {
  const std::size_t half = std::size_t{1} << r;
  std::vector<std::uint32_t> images(2 * half);
  for (std::size_t x = 0; x < half; ++x) {
    images[x] = static_cast<std::uint32_t>(half + x);
    images[half + x] = static_cast<std::uint32_t>(x);
  }
  return CoordinatePerm(std::move(images));
}

// For other = b o rho o a^{-1} with a = (c, A), b = (d, B):
// A_other = (sigma_{A^{-T}} | sigma_{B^{-T}}) A_rho + (chi_c | chi_d).
CodeIsometry isometry_from_witness(int r, const DoubleCosetWitness& w) {
  const LinearMap left = *w.a.linear.inverse();
  const LinearMap right = *w.b.linear.inverse();
  return {concat(half_space_word(r, w.a.shift), half_space_word(r, w.b.shift)),
          halves(left.transpose(), right.transpose())};
}

bool carries(const CodeIsometry& iso, const ExplicitCode& from, const ExplicitCode& to) {
  std::vector<BitWord> image;
  image.reserve(from.size());
  for (const auto& w : from.words()) image.push_back(iso(w));
  return ExplicitCode(to.length(), std::move(image)) == to;
}

}  // namespace

std::optional<CodeIsometry> hadamard_isomorphism(const PointPerm& tau, const PointPerm& other) {
  const int r = tau.dim();
  const HadamardCode source = hadamard_a_tau(tau);
  const HadamardCode target = hadamard_a_tau(other);
  if (auto w = double_coset_member(other, tau, CosetGroup::GA)) {
    CodeIsometry iso = isometry_from_witness(r, *w);
    if (!carries(iso, source.words, target.words)) throw InconsistentInput("Hadamard isometry check failed");
    return iso;
  }
  if (auto w = double_coset_member(other, invert_perm(tau), CosetGroup::GA)) {
    // A_{tau^{-1}} is A_tau with its halves swapped.
    CodeIsometry iso = isometry_from_witness(r, *w);
    iso.perm = compose(iso.perm, swap_halves(r));
    if (!carries(iso, source.words, target.words)) throw InconsistentInput("Hadamard isometry check failed");
    return iso;
  }
  return std::nullopt;
}

}  // namespace perfcode

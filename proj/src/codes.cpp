#include "perfcode/codes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <utility>

#include "perfcode/errors.hpp"

namespace perfcode {

CoordinatePerm::CoordinatePerm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]) throw MalformedInput("coordinate images do not form a permutation");
    seen[p] = true;
  }
}

CoordinatePerm CoordinatePerm::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i);
  return CoordinatePerm(std::move(images));
}

CoordinatePerm CoordinatePerm::from_point_perm(const PointPerm& tau) {
  return CoordinatePerm(std::vector<std::uint32_t>(tau.images().begin(), tau.images().end()));
}

BitWord CoordinatePerm::apply(const BitWord& y) const {
  if (y.size() != images_.size()) throw DimensionMismatch("coordinate permutation length differs from word");
  BitWord out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y.test(i)) out.set(images_[i]);
  return out;
}

CoordinatePerm compose(const CoordinatePerm& outer, const CoordinatePerm& inner) {
  if (outer.size() != inner.size()) throw DimensionMismatch("coordinate permutations differ in length");
  std::vector<std::uint32_t> images(inner.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = outer(inner(static_cast<std::uint32_t>(i)));
  return CoordinatePerm(std::move(images));
}

bool LinearCode::contains(const BitWord& x) const {
  if (x.size() != length) return false;
  const BitMatrix checks = parity_check();
  for (const auto& h : checks.row_words())
    if (h.dot(x)) return false;
  return true;
}

LinearCode extended_hamming(int r) {
  if (r < 1) throw DimensionMismatch("extended Hamming code needs r >= 1");
  const std::size_t n = std::size_t{1} << r;
  if (n > BitWord::kMaxBits) throw BudgetExceeded("extended Hamming code length exceeds word capacity");
  BitMatrix checks(0, n);
  for (int j = 0; j < r; ++j) {
    BitWord row(n);
    for (std::size_t a = 0; a < n; ++a)
      if ((a >> j) & 1U) row.set(a);
    checks.append_row(row);
  }
  checks.append_row(BitWord::ones(n));
  return {n, null_space(checks)};
}

LinearCode intersect(const LinearCode& c, const LinearCode& d) {
  if (c.length != d.length) throw DimensionMismatch("intersecting codes of different lengths");
  BitMatrix checks = c.parity_check();
  const BitMatrix other = d.parity_check();
  for (const auto& row : other.row_words()) checks.append_row(row);
  if (checks.rows() == 0) return {c.length, BitMatrix::identity(c.length)};
  return {c.length, null_space(checks)};
}

LinearCode direct_product(const LinearCode& c, const LinearCode& d) {
  const std::size_t n = c.length + d.length;
  BitMatrix g(0, n);
  const BitWord zero_c(c.length);
  const BitWord zero_d(d.length);
  for (const auto& row : c.generators.row_words()) g.append_row(concat(row, zero_d));
  for (const auto& row : d.generators.row_words()) g.append_row(concat(zero_c, row));
  return {n, std::move(g)};
}

LinearCode apply_point_perm_to_code(const PointPerm& tau, const LinearCode& c) {
  if (tau.size() != c.length) throw DimensionMismatch("permutation size differs from code length");
  const auto pi = CoordinatePerm::from_point_perm(tau);
  BitMatrix g(0, c.length);
  for (const auto& row : c.generators.row_words()) g.append_row(pi.apply(row));
  return {c.length, std::move(g)};
}

std::vector<Point> linear_structure_set(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  std::vector<Point> result;
  const auto n = static_cast<Point>(tau.size());
  for (Point a = 0; a < n; ++a) {
    bool additive = true;
    for (Point b = 0; b < n && additive; ++b) additive = tau(a ^ b) == (tau(a) ^ tau(b));
    if (additive) result.push_back(a);
  }
  return result;
}

ExplicitCode::ExplicitCode(std::size_t length, std::vector<BitWord> words) : length_(length), words_(std::move(words)) {
  for (const auto& w : words_)
    if (w.size() != length_) throw DimensionMismatch("codeword length differs from code length");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool ExplicitCode::contains(const BitWord& x) const { return std::binary_search(words_.begin(), words_.end(), x); }

namespace {

int xor_rank(std::vector<std::uint64_t> vectors) {
  std::vector<std::uint64_t> basis;
  for (auto v : vectors) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace

BitWord coset_representative(int r, Point a, Point image) {
  const std::size_t half = std::size_t{1} << r;
  BitWord left(half);
  BitWord right(half);
  left.flip(a);
  left.flip(0);
  right.flip(image);
  right.flip(0);
  return concat(left, right);
}

CodeStats stats_coset_union(const CosetUnionCode& s, const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  const int r = s.r;
  if (tau.dim() != r || s.reps.size() != tau.size()) throw InconsistentInput("code and permutation sizes differ");
  for (Point a = 0; a < tau.size(); ++a)
    if (s.reps[a] != coset_representative(r, a, tau(a))) throw InconsistentInput("coset representative does not match tau");
  if (2 * r > 64) throw BudgetExceeded("syndrome span needs r <= 32");

  const int base_dim = static_cast<int>(s.base.dimension());
  std::vector<std::uint64_t> syndromes;
  syndromes.reserve(tau.size());
  for (Point a = 0; a < tau.size(); ++a) syndromes.push_back(std::uint64_t{a} | (std::uint64_t{tau(a)} << r));

  const auto lin = linear_structure_set(tau);
  CodeStats stats;
  stats.rank = base_dim + xor_rank(std::move(syndromes));
  stats.kernel_dim = base_dim + std::countr_zero(lin.size());
  stats.min_distance = 4;
  const int log_size = base_dim + r;
  stats.size = log_size < 64 ? std::uint64_t{1} << log_size : 0;
  return stats;
}

CodeStats stats_from_tau(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  const int r = tau.dim();
  std::vector<std::uint64_t> syndromes;
  syndromes.reserve(tau.size());
  for (Point a = 0; a < tau.size(); ++a) syndromes.push_back(std::uint64_t{a} | (std::uint64_t{tau(a)} << r));
  const int base_dim = 2 * ((1 << r) - r - 1);
  CodeStats stats;
  stats.rank = base_dim + xor_rank(std::move(syndromes));
  stats.kernel_dim = base_dim + std::countr_zero(linear_structure_set(tau).size());
  stats.min_distance = 4;
  const int log_size = base_dim + r;
  stats.size = log_size < 64 ? std::uint64_t{1} << log_size : 0;
  return stats;
}

int intersection_dim(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  const int r = tau.dim();
  const std::size_t n = tau.size();
  if (n > BitWord::kMaxBits) throw BudgetExceeded("intersection needs 2^r <= 512");
  // Row j of the checks has support {x : x_j = 1}; the last row is all ones. tau moves
  // position x to tau(x), so the checks of tau(H) have support {tau(x) : x_j = 1}.
  BitMatrix checks(0, n);
  for (int j = 0; j < r; ++j) {
    BitWord row(n);
    BitWord moved(n);
    for (Point x = 0; x < n; ++x)
      if ((x >> j) & 1U) {
        row.set(x);
        moved.set(tau(x));
      }
    checks.append_row(row);
    checks.append_row(moved);
  }
  checks.append_row(BitWord::ones(n));
  return static_cast<int>(n - rank(checks));
}

namespace {

constexpr std::size_t kMaterializeLimit = std::size_t{1} << 21;

// All words of span(basis) + each rep; Gray-code walk over the span.
std::vector<BitWord> enumerate_cosets(const BitMatrix& basis, const std::vector<BitWord>& reps) {
  const std::size_t k = basis.rows();
  if (k >= 63 || (std::size_t{1} << k) > kMaterializeLimit / std::max<std::size_t>(reps.size(), 1))
    throw BudgetExceeded("materialization exceeds 2^21 codewords");
  std::vector<BitWord> words;
  words.reserve(reps.size() << k);
  for (const auto& rep : reps) {
    BitWord w = rep;
    words.push_back(w);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
      w ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
      words.push_back(w);
    }
  }
  return words;
}

}  // namespace

ExplicitCode explicit_materialize(const CosetUnionCode& s) {
  const BitMatrix basis = row_basis(s.base.generators);
  return ExplicitCode(s.length(), enumerate_cosets(basis, s.reps));
}

ExplicitCode explicit_materialize(const LinearCode& c) {
  const BitMatrix basis = row_basis(c.generators);
  return ExplicitCode(c.length, enumerate_cosets(basis, {BitWord(c.length)}));
}

int brute_rank(const ExplicitCode& e) {
  SpanBuilder span(e.length());
  for (const auto& w : e.words()) span.insert(w);
  return static_cast<int>(span.dimension());
}

int brute_kernel_dim(const ExplicitCode& e) {
  SpanBuilder kernel(e.length());
  for (const auto& x : e.words()) {
    bool stable = true;
    for (const auto& y : e.words()) {
      if (!e.contains(x ^ y)) {
        stable = false;
        break;
      }
    }
    if (stable) kernel.insert(x);
  }
  return static_cast<int>(kernel.dimension());
}

int brute_min_distance(const ExplicitCode& e) {
  const auto& w = e.words();
  if (w.size() < 2) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, distance(w[i], w[j]));
  return static_cast<int>(best);
}

}  // namespace perfcode

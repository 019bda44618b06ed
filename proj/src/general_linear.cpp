#include "perfcode/general_linear.hpp"

#include <array>
#include <map>
#include <mutex>

#include "perfcode/errors.hpp"

namespace perfcode {

std::uint64_t gl_order(int r) {
  std::uint64_t order = 1;
  const std::uint64_t q = std::uint64_t{1} << r;
  for (int i = 0; i < r; ++i) order *= q - (std::uint64_t{1} << i);
  return order;
}

namespace {

// Rows are picked from the last (most significant in row_major_code) to the first,
// each in increasing value, so matrices come out in increasing code order.
bool enumerate_rows(int r, int i, std::array<Point, LinearMap::kMaxDim>& rows, std::uint64_t span,
                    const std::function<bool(const LinearMap&)>& visit) {
  if (i < 0) {
    return visit(LinearMap::from_rows(r, std::span<const Point>(rows.data(), static_cast<std::size_t>(r))));
  }
  const Point n = Point{1} << r;
  for (Point v = 1; v < n; ++v) {
    if ((span >> v) & 1U) continue;
    std::uint64_t next = span;
    for (Point p = 0; p < n; ++p)
      if ((span >> p) & 1U) next |= std::uint64_t{1} << (p ^ v);
    rows[i] = v;
    if (!enumerate_rows(r, i - 1, rows, next, visit)) return false;
  }
  return true;
}

}  // namespace

bool gl_enumerate(int r, const std::function<bool(const LinearMap&)>& visit) {
  if (r < 1) throw DimensionMismatch("GL(r,2) needs r >= 1");
  if (r > 6) throw BudgetExceeded("GL(" + std::to_string(r) + ",2) enumeration exceeds the r <= 6 budget");
  std::array<Point, LinearMap::kMaxDim> rows{};
  return enumerate_rows(r, r - 1, rows, std::uint64_t{1}, visit);
}

const std::vector<LinearMap>& gl_list(int r) {
  if (r < 1 || r > 4) throw BudgetExceeded("materialized GL(r,2) is limited to r <= 4");
  static std::mutex mutex;
  static std::map<int, std::vector<LinearMap>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(r);
  if (inserted) {
    it->second.reserve(gl_order(r));
    gl_enumerate(r, [&](const LinearMap& m) {
      it->second.push_back(m);
      return true;
    });
  }
  return it->second;
}

namespace {

constexpr int kMaxCosetDim = 5;

void check_coset_dims(const PointPerm& target, const PointPerm& tau) {
  if (target.dim() != tau.dim()) throw DimensionMismatch("permutations have different dimensions");
  if (tau.dim() > kMaxCosetDim) throw BudgetExceeded("double coset sweep is limited to r <= 5");
}

// Evaluates candidate(y) = target(alpha(tau_inv(y))) and checks it is affine with
// translation candidate(0). Returns the affine map on success.
template <class Alpha>
std::optional<AffineMap> affine_candidate(const PointPerm& target, const PointPerm& tau_inv, const Alpha& alpha,
                                          int r) {
  const std::size_t n = std::size_t{1} << r;
  std::array<Point, std::size_t{1} << kMaxCosetDim> cand{};
  const Point shift = target(alpha(tau_inv(0)));
  cand[0] = 0;
  for (std::size_t y = 1; y < n; ++y) {
    cand[y] = target(alpha(tau_inv(static_cast<Point>(y)))) ^ shift;
    const std::size_t low = y & (~y + 1);
    if (low != y && cand[y] != (cand[y ^ low] ^ cand[low])) return std::nullopt;
  }
  std::array<Point, LinearMap::kMaxDim> cols{};
  for (int j = 0; j < r; ++j) cols[j] = cand[std::size_t{1} << j];
  return AffineMap{shift, LinearMap::from_columns(r, std::span<const Point>(cols.data(), static_cast<std::size_t>(r)))};
}

}  // namespace

std::optional<DoubleCosetWitness> double_coset_member(const PointPerm& target, const PointPerm& tau,
                                                      CosetGroup group) {
  check_coset_dims(target, tau);
  const int r = tau.dim();
  const PointPerm tau_inv = invert_perm(tau);
  std::optional<DoubleCosetWitness> found;

  if (group == CosetGroup::GL) {
    if (!target.fixes_zero() || !tau.fixes_zero()) throw ZeroNotFixed();
    gl_enumerate(r, [&](const LinearMap& a) {
      if (auto b = affine_candidate(target, tau_inv, a, r)) {
        found = DoubleCosetWitness{AffineMap::from_linear(a), *b};
        return false;
      }
      return true;
    });
    return found;
  }

  const Point n = Point{1} << r;
  gl_enumerate(r, [&](const LinearMap& a) {
    for (Point c = 0; c < n; ++c) {
      const AffineMap alpha{c, a};
      if (auto b = affine_candidate(target, tau_inv, alpha, r)) {
        found = DoubleCosetWitness{alpha, *b};
        return false;
      }
    }
    return true;
  });
  return found;
}

bool verify_double_coset(const PointPerm& target, const PointPerm& tau, const DoubleCosetWitness& w) {
  if (target.dim() != tau.dim() || w.a.dim() != tau.dim() || w.b.dim() != tau.dim()) return false;
  if (!w.a.linear.invertible() || !w.b.linear.invertible()) return false;
  const AffineMap a_inv = inverse(w.a);
  for (std::size_t x = 0; x < tau.size(); ++x) {
    const auto p = static_cast<Point>(x);
    if (target(p) != w.b(tau(a_inv(p)))) return false;
  }
  return true;
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;

// Search node for the canonical form: the first `depth` columns of the right factor C,
// and the greedy left normalization built so far.
struct Partial {
  std::array<std::uint8_t, kMaxCosetDim> cols{};
  std::array<std::uint8_t, kMaxCosetDim> basis{};  // rho-values sent to e_1, e_2, ...
  std::array<std::uint8_t, std::size_t{1} << kMaxCosetDim> norm{};
  int depth = 0;
  int rank = 0;
  Point span_mask = 1;  // points spanned by cols, as a bitmask (r <= 5)
};

Point apply_cols(const Partial& s, Point x) {
  Point v = 0;
  for (int j = 0; x != 0; ++j, x >>= 1)
    if (x & 1U) v ^= s.cols[j];
  return v;
}

// Extends `s` by column `col`, writing the new block of normalized values to `out`.
// Returns -1/0/+1 for the block compared against `best` (best_len == 0 means no best yet);
// stops early and returns +1 as soon as the block is known to be larger.
int extend(const PointPerm& tau, Partial& s, Point col, std::uint8_t* out, const std::uint8_t* best, bool have_best) {
  const int k = s.depth;
  s.cols[k] = static_cast<std::uint8_t>(col);
  s.depth = k + 1;
  const Point lo = Point{1} << k;
  int cmp = have_best ? 0 : -1;
  std::array<std::uint8_t, std::size_t{1} << kMaxCosetDim> span{};
  for (Point x = lo; x < 2 * lo; ++x) {
    const Point v = tau(apply_cols(s, x));
    std::uint8_t value = s.norm[v];
    if (value == kUnset) {
      value = static_cast<std::uint8_t>(1U << s.rank);
      int count = 0;
      for (std::size_t u = 0; u < s.norm.size(); ++u)
        if (s.norm[u] != kUnset) span[count++] = static_cast<std::uint8_t>(u);
      for (int i = 0; i < count; ++i) s.norm[span[i] ^ v] = static_cast<std::uint8_t>(s.norm[span[i]] ^ value);
      s.basis[s.rank++] = static_cast<std::uint8_t>(v);
    }
    const std::size_t idx = x - lo;
    out[idx] = value;
    if (cmp == 0) {
      if (value < best[idx]) {
        cmp = -1;
      } else if (value > best[idx]) {
        return 1;
      }
    }
  }
  return cmp;
}

}  // namespace

CanonicalForm gl_canonical_form(const PointPerm& tau) {
  const int r = tau.dim();
  if (r > kMaxCosetDim) throw BudgetExceeded("canonical form is limited to r <= 5");
  if (auto m = is_linear(tau)) {
    // GL tau GL = GL, whose least element is the identity.
    return {PointPerm::identity(r), {AffineMap::identity(r), AffineMap::from_linear(*m->inverse())}};
  }
  const Point n = Point{1} << r;

  Partial root;
  root.norm.fill(kUnset);
  root.norm[0] = 0;
  std::vector<Partial> survivors{root};
  std::vector<Partial> next;
  std::array<std::uint8_t, std::size_t{1} << kMaxCosetDim> best{};
  std::array<std::uint8_t, std::size_t{1} << kMaxCosetDim> block{};

  for (int level = 0; level < r; ++level) {
    next.clear();
    bool have_best = false;
    const std::size_t block_len = std::size_t{1} << level;
    for (const Partial& s : survivors) {
      for (Point col = 1; col < n; ++col) {
        if ((s.span_mask >> col) & 1U) continue;
        Partial child = s;
        const int cmp = extend(tau, child, col, block.data(), best.data(), have_best);
        if (cmp > 0) continue;
        Point mask = s.span_mask;
        for (Point p = 0; p < n; ++p)
          if ((s.span_mask >> p) & 1U) mask |= Point{1} << (p ^ col);
        child.span_mask = mask;
        if (cmp < 0) {
          next.clear();
          std::copy(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(block_len), best.begin());
          have_best = true;
        }
        next.push_back(child);
      }
    }
    survivors.swap(next);
  }

  const Partial& s = survivors.front();
  std::array<Point, LinearMap::kMaxDim> cols{};
  std::array<Point, LinearMap::kMaxDim> basis{};
  for (int j = 0; j < r; ++j) {
    cols[j] = s.cols[j];
    basis[j] = s.basis[j];
  }
  const auto c = LinearMap::from_columns(r, std::span<const Point>(cols.data(), static_cast<std::size_t>(r)));
  const auto b_inv = LinearMap::from_columns(r, std::span<const Point>(basis.data(), static_cast<std::size_t>(r)));
  const LinearMap b = *b_inv.inverse();
  const LinearMap a = *c.inverse();
  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x) images[x] = b(tau(c(x)));
  return {PointPerm(r, std::move(images)), {AffineMap::from_linear(a), AffineMap::from_linear(b)}};
}

}  // namespace perfcode

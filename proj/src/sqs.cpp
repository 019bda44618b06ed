#include "perfcode/sqs.hpp"

#include <algorithm>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

Quadruple sorted(Quadruple q) {
  std::sort(q.begin(), q.end());
  return q;
}

constexpr int kMaxSqsDim = 5;

void check_tau(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  if (tau.dim() > kMaxSqsDim) throw BudgetExceeded("SQS_tau is limited to r <= 5");
}

// f(y) = outer(A(inner(y))) is linear, checked incrementally along the lowest set bit.
bool linear_composite(const PointPerm& outer, const LinearMap& a, const PointPerm& inner) {
  const std::size_t n = inner.size();
  std::array<Point, std::size_t{1} << kMaxSqsDim> f{};
  for (std::size_t y = 1; y < n; ++y) {
    f[y] = outer(a(inner(static_cast<Point>(y))));
    const std::size_t low = y & (~y + 1);
    if (low != y && f[y] != (f[y ^ low] ^ f[low])) return false;
  }
  return true;
}

void sweep_gl(int r, const std::function<void(const LinearMap&)>& visit) {
  if (r <= 4) {
    for (const auto& a : gl_list(r)) visit(a);
    return;
  }
  gl_enumerate(r, [&](const LinearMap& a) {
    visit(a);
    return true;
  });
}

}  // namespace

Sqs::Sqs(std::size_t order, std::vector<Quadruple> quadruples) : order_(order), quads_(std::move(quadruples)) {
  for (auto& q : quads_) {
    q = sorted(q);
    if (q[3] >= order_) throw MalformedInput("quadruple point out of range");
    if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]) throw MalformedInput("quadruple has a repeated point");
  }
  std::sort(quads_.begin(), quads_.end());
}

bool Sqs::contains(Quadruple q) const { return std::binary_search(quads_.begin(), quads_.end(), sorted(q)); }

Sqs sqs_from_tau(const PointPerm& tau) {
  check_tau(tau);
  const int r = tau.dim();
  const Point n = Point{1} << r;
  std::vector<Quadruple> quads;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c) {
        const Point d = a ^ b ^ c;
        if (d <= c) continue;
        quads.push_back({a, b, c, d});
        quads.push_back({right_point(r, a), right_point(r, b), right_point(r, c), right_point(r, d)});
      }
  for (Point a = 0; a < n; ++a)
    for (Point c = a + 1; c < n; ++c) {
      const Point s = tau(a ^ c);
      for (Point b = 0; b < n; ++b) {
        const Point d = b ^ s;
        if (b < d) quads.push_back({a, c, right_point(r, b), right_point(r, d)});
      }
    }
  return Sqs(std::size_t{2} << r, std::move(quads));
}

std::optional<Triple> validate_sqs(const Sqs& q) {
  const std::size_t v = q.order();
  if (v > 256) throw BudgetExceeded("SQS validation is limited to 256 points");
  std::vector<std::uint8_t> cover(v * v * v, 0);
  auto bump = [&](Point i, Point j, Point k) {
    auto& c = cover[(i * v + j) * v + k];
    if (c < 2) ++c;
  };
  for (const auto& quad : q.quadruples()) {
    bump(quad[0], quad[1], quad[2]);
    bump(quad[0], quad[1], quad[3]);
    bump(quad[0], quad[2], quad[3]);
    bump(quad[1], quad[2], quad[3]);
  }
  for (Point i = 0; i < v; ++i)
    for (Point j = i + 1; j < v; ++j)
      for (Point k = j + 1; k < v; ++k)
        if (cover[(i * v + j) * v + k] != 1) return Triple{i, j, k};
  return std::nullopt;
}

Sqs weight_four_supports(const ExplicitCode& code) {
  std::vector<Quadruple> quads;
  for (const auto& w : code.words()) {
    if (w.weight() != 4) continue;
    Quadruple q{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.test(i)) q[k++] = static_cast<Point>(i);
    quads.push_back(q);
  }
  return Sqs(code.length(), std::move(quads));
}

namespace {

// Symmetric difference of two quadruples sharing exactly two points.
std::optional<Quadruple> symmetric_difference(const Quadruple& x, const Quadruple& y) {
  std::array<Point, 8> out{};
  const auto end = std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), out.begin());
  if (end - out.begin() != 4) return std::nullopt;
  return Quadruple{out[0], out[1], out[2], out[3]};
}

}  // namespace

Lemma1Report lemma1_check(const PointPerm& tau) {
  check_tau(tau);
  if (is_linear(tau)) throw AffineInput();
  const int r = tau.dim();
  const Sqs q = sqs_from_tau(tau);
  const std::size_t v = q.order();
  std::vector<std::vector<std::uint32_t>> through(v * v);
  for (std::uint32_t i = 0; i < q.size(); ++i) {
    const auto& quad = q.quadruples()[i];
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) through[quad[x] * v + quad[y]].push_back(i);
  }
  auto in_system = [&](const Quadruple& x, const Quadruple& y) {
    const auto d = symmetric_difference(x, y);
    return d && q.contains(*d);
  };

  Lemma1Report report;
  const Point n = Point{1} << r;
  for (int side = 0; side < 2; ++side) {
    const Point base = side == 0 ? 0 : n;
    for (Point a = 0; a < n; ++a)
      for (Point b = a + 1; b < n; ++b) {
        const auto& list = through[(base + a) * v + base + b];
        for (std::size_t i = 0; i < list.size(); ++i)
          for (std::size_t j = i + 1; j < list.size(); ++j) {
            ++report.same_side_pairs;
            const auto& x = q.quadruples()[list[i]];
            const auto& y = q.quadruples()[list[j]];
            if (!in_system(x, y)) report.counterexamples.emplace_back(x, y);
          }
      }
  }
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b) {
      const auto& list = through[left_point(r, a) * v + right_point(r, b)];
      bool witness = false;
      for (std::size_t i = 0; i < list.size() && !witness; ++i)
        for (std::size_t j = i + 1; j < list.size() && !witness; ++j)
          witness = !in_system(q.quadruples()[list[i]], q.quadruples()[list[j]]);
      if (!witness) report.missing_witnesses.emplace_back(a, b);
    }
  return report;
}

Point StructuredPerm::operator()(Point p) const {
  const int r = left.dim();
  const Point n = Point{1} << r;
  bool right_side = p >= n;
  const Point x = p & (n - 1);
  if (swap) right_side = !right_side;
  return right_side ? right_point(r, right(x)) : left_point(r, left(x));
}

Sqs apply_structured(const StructuredPerm& pi, const Sqs& q) {
  if (q.order() != (std::size_t{2} << pi.left.dim()) || pi.left.dim() != pi.right.dim())
    throw DimensionMismatch("structured permutation does not match the system order");
  std::vector<Quadruple> quads;
  quads.reserve(q.size());
  for (const auto& quad : q.quadruples()) quads.push_back({pi(quad[0]), pi(quad[1]), pi(quad[2]), pi(quad[3])});
  return Sqs(q.order(), std::move(quads));
}

Sqs xi_swap(const Sqs& q) {
  const std::size_t half = q.order() / 2;
  if (q.order() % 2 != 0) throw DimensionMismatch("xi swap needs an even order");
  std::vector<Quadruple> quads;
  quads.reserve(q.size());
  for (const auto& quad : q.quadruples()) {
    Quadruple image{};
    for (int i = 0; i < 4; ++i) image[i] = quad[i] < half ? quad[i] + half : quad[i] - half;
    quads.push_back(image);
  }
  return Sqs(q.order(), std::move(quads));
}

std::optional<StructuredPerm> sqs_isomorphic(const PointPerm& tau, const PointPerm& other) {
  if (tau.dim() != other.dim()) throw DimensionMismatch("permutations have different dimensions");
  check_tau(tau);
  check_tau(other);
  const int r = tau.dim();
  const bool linear = is_linear(tau).has_value();
  if (linear != is_linear(other).has_value()) return std::nullopt;
  if (other == tau) return StructuredPerm::identity(r);
  const PointPerm inv = invert_perm(tau);
  if (other == inv) return StructuredPerm{AffineMap::identity(r), AffineMap::identity(r), true};
  if (auto w = double_coset_member(other, tau, CosetGroup::GL)) return StructuredPerm{w->a, w->b, false};
  if (auto w = double_coset_member(other, inv, CosetGroup::GL)) return StructuredPerm{w->a, w->b, true};
  return std::nullopt;
}

PointPerm sqs_class_key(const PointPerm& tau) {
  check_tau(tau);
  PointPerm forward = gl_canonical_form(tau).form;
  PointPerm backward = gl_canonical_form(invert_perm(tau)).form;
  return std::min(forward, backward);
}

PointTransitivity point_transitive(const PointPerm& tau) {
  check_tau(tau);
  if (is_linear(tau)) return {true, std::nullopt};
  auto w = double_coset_member(invert_perm(tau), tau, CosetGroup::GL);
  return {w.has_value(), w};
}

std::uint64_t aut_order(const PointPerm& tau) {
  check_tau(tau);
  const int r = tau.dim();
  if (is_linear(tau)) return (std::uint64_t{2} << r) * gl_order(r + 1);
  const PointPerm inv = invert_perm(tau);
  std::uint64_t count = 0;
  sweep_gl(r, [&](const LinearMap& a) {
    count += linear_composite(tau, a, inv) ? 1 : 0;
    count += linear_composite(tau, a, tau) ? 1 : 0;
  });
  return (std::uint64_t{1} << (2 * r)) * count;
}

std::vector<StructuredPerm> structured_automorphisms(const PointPerm& tau) {
  check_tau(tau);
  if (is_linear(tau)) throw AffineInput();
  const int r = tau.dim();
  const PointPerm inv = invert_perm(tau);
  std::vector<StructuredPerm> result;
  auto linear_part = [&](const LinearMap& a, const PointPerm& inner) {
    std::array<Point, LinearMap::kMaxDim> cols{};
    for (int j = 0; j < r; ++j) cols[j] = tau(a(inner(Point{1} << j)));
    return AffineMap::from_linear(LinearMap::from_columns(r, std::span<const Point>(cols.data(), static_cast<std::size_t>(r))));
  };
  sweep_gl(r, [&](const LinearMap& a) {
    if (linear_composite(tau, a, inv)) result.push_back({AffineMap::from_linear(a), linear_part(a, inv), false});
    if (linear_composite(tau, a, tau)) result.push_back({AffineMap::from_linear(a), linear_part(a, tau), true});
  });
  return result;
}

}  // namespace perfcode

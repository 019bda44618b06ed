#include "perfcode/point_perm.hpp"

#include <charconv>
#include <utility>

#include "perfcode/errors.hpp"

namespace perfcode {

PointPerm::PointPerm(int r, std::vector<Point> images) : r_(r), images_(std::move(images)) {
  if (r < 0 || r > LinearMap::kMaxDim) throw MalformedInput("point permutation dimension out of range");
  const std::size_t n = std::size_t{1} << r;
  if (images_.size() != n) throw MalformedInput("permutation of F^" + std::to_string(r) + " needs " +
                                                std::to_string(n) + " images");
  std::vector<bool> seen(n, false);
  for (Point p : images_) {
    if (p >= n || seen[p]) throw MalformedInput("images do not form a permutation");
    seen[p] = true;
  }
}

PointPerm PointPerm::identity(int r) {
  std::vector<Point> images(std::size_t{1} << r);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>(i);
  return PointPerm(r, std::move(images));
}

PointPerm PointPerm::from_linear(const LinearMap& m) { return from_affine(AffineMap::from_linear(m)); }

PointPerm PointPerm::from_affine(const AffineMap& f) {
  if (!f.linear.invertible()) throw DimensionMismatch("singular map is not a permutation");
  const int r = f.dim();
  std::vector<Point> images(std::size_t{1} << r);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = f(static_cast<Point>(i));
  return PointPerm(r, std::move(images));
}

bool PointPerm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string PointPerm::id() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(images_[i]);
  }
  return s;
}

PointPerm PointPerm::from_id(const std::string& id) {
  std::vector<Point> images;
  const char* p = id.data();
  const char* end = id.data() + id.size();
  while (p < end) {
    Point v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw MalformedInput("bad permutation id '" + id + "'");
    images.push_back(v);
    p = next;
    if (p < end) {
      if (*p != '.') throw MalformedInput("bad permutation id '" + id + "'");
      ++p;
    }
  }
  int r = 0;
  while ((std::size_t{1} << r) < images.size()) ++r;
  return PointPerm(r, std::move(images));
}

std::size_t PointPerm::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(r_);
  for (Point p : images_) h = (h ^ p) * 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const PointPerm& a, const PointPerm& b) {
  if (a.r_ != b.r_) return a.r_ <=> b.r_;
  return a.images_ <=> b.images_;
}

PointPerm compose(const PointPerm& outer, const PointPerm& inner) {
  if (outer.dim() != inner.dim()) throw DimensionMismatch("composing permutations of different dimension");
  std::vector<Point> images(inner.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = outer(inner(static_cast<Point>(i)));
  return PointPerm(outer.dim(), std::move(images));
}

PointPerm invert_perm(const PointPerm& tau) {
  std::vector<Point> images(tau.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[tau(static_cast<Point>(i))] = static_cast<Point>(i);
  return PointPerm(tau.dim(), std::move(images));
}

std::optional<LinearMap> is_linear(const PointPerm& tau) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  const int r = tau.dim();
  std::array<Point, LinearMap::kMaxDim> cols{};
  for (int j = 0; j < r; ++j) cols[j] = tau(Point{1} << j);
  const auto m = LinearMap::from_columns(r, std::span<const Point>(cols.data(), static_cast<std::size_t>(r)));
  for (std::size_t b = 1; b < tau.size(); ++b)
    if (tau(static_cast<Point>(b)) != m(static_cast<Point>(b))) return std::nullopt;
  return m;
}

std::optional<AffineMap> as_affine(const PointPerm& tau) {
  const Point shift = tau(0);
  std::vector<Point> images(tau.images());
  for (auto& p : images) p ^= shift;
  auto lin = is_linear(PointPerm(tau.dim(), std::move(images)));
  if (!lin) return std::nullopt;
  return AffineMap{shift, *lin};
}

}  // namespace perfcode

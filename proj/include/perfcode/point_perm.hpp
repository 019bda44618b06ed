#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "perfcode/linear_map.hpp"

namespace perfcode {

/// Permutation of the 2^r points of F^r.
class PointPerm {
 public:
  PointPerm() = default;
  /// Throws MalformedInput unless `images` is a permutation of [0, 2^r).
  PointPerm(int r, std::vector<Point> images);

  static PointPerm identity(int r);
  /// sigma_M: b -> M b.
  static PointPerm from_linear(const LinearMap& m);
  static PointPerm from_affine(const AffineMap& f);

  int dim() const { return r_; }
  std::size_t size() const { return images_.size(); }
  Point operator()(Point a) const { return images_[a]; }
  const std::vector<Point>& images() const { return images_; }

  bool fixes_zero() const { return !images_.empty() && images_[0] == 0; }
  bool is_identity() const;

  /// Dot-separated images, e.g. "0.1.3.2"; used as an identifier in catalogs.
  std::string id() const;
  static PointPerm from_id(const std::string& id);

  std::size_t hash() const;

  friend bool operator==(const PointPerm&, const PointPerm&) = default;
  friend std::strong_ordering operator<=>(const PointPerm& a, const PointPerm& b);

 private:
  int r_ = 0;
  std::vector<Point> images_;
};

/// (outer o inner)(a) = outer(inner(a)); throws DimensionMismatch on unequal r.
PointPerm compose(const PointPerm& outer, const PointPerm& inner);
PointPerm invert_perm(const PointPerm& tau);

/// The matrix M with tau = sigma_M, or nullopt. Throws ZeroNotFixed.
///
/// M is read off the images of the standard basis and then checked at every point.
std::optional<LinearMap> is_linear(const PointPerm& tau);
/// The affine map equal to tau, if any (translation part read at 0).
std::optional<AffineMap> as_affine(const PointPerm& tau);

}  // namespace perfcode

template <>
struct std::hash<perfcode::PointPerm> {
  std::size_t operator()(const perfcode::PointPerm& p) const noexcept { return p.hash(); }
};

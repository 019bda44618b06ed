#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>

#include "perfcode/bit_matrix.hpp"

namespace perfcode {

/// Point of F^r encoded little-endian: bit j holds coordinate j+1.
using Point = std::uint32_t;

/// r x r matrix over GF(2) acting on points, r <= kMaxDim.
///
/// Stored by columns: column j is the image of the j-th standard basis vector,
/// so M*b is the XOR of the columns selected by the set bits of b.
class LinearMap {
 public:
  static constexpr int kMaxDim = 16;

  LinearMap() = default;
  /// Zero map on F^r.
  explicit LinearMap(int r);

  static LinearMap identity(int r);
  static LinearMap from_columns(int r, std::span<const Point> columns);
  /// Rows as r-bit integers; bit j of row i is entry (i, j).
  static LinearMap from_rows(int r, std::span<const Point> rows);
  /// Square BitMatrix with at most kMaxDim rows.
  static LinearMap from_bit_matrix(const BitMatrix& m);
  static LinearMap block_diagonal(const LinearMap& upper, const LinearMap& lower);

  int dim() const { return r_; }
  Point column(int j) const { return cols_[j]; }
  Point row(int i) const;
  bool entry(int i, int j) const { return (cols_[j] >> i) & 1U; }

  Point operator()(Point b) const {
    Point x = 0;
    for (int j = 0; b != 0; ++j, b >>= 1)
      if (b & 1U) x ^= cols_[j];
    return x;
  }

  int rank() const;
  bool invertible() const { return rank() == r_; }
  std::optional<LinearMap> inverse() const;
  LinearMap transpose() const;

  /// Integer whose bit (i*r + j) is entry (i, j); defines the enumeration order of GL(r,2).
  std::uint64_t row_major_code() const;

  BitMatrix to_bit_matrix() const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  int r_ = 0;
  std::array<Point, kMaxDim> cols_{};
};

/// The affine transformation b -> shift + linear(b).
struct AffineMap {
  Point shift = 0;
  LinearMap linear;

  static AffineMap identity(int r) { return {0, LinearMap::identity(r)}; }
  static AffineMap from_linear(const LinearMap& m) { return {0, m}; }

  int dim() const { return linear.dim(); }
  Point operator()(Point b) const { return shift ^ linear(b); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// f o g
AffineMap compose(const AffineMap& f, const AffineMap& g);
/// Throws DimensionMismatch when the linear part is singular.
AffineMap inverse(const AffineMap& f);

}  // namespace perfcode

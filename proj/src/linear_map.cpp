#include "perfcode/linear_map.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "perfcode/errors.hpp"

namespace perfcode {

namespace {

void check_dim(int r) {
  if (r < 0 || r > LinearMap::kMaxDim)
    throw DimensionMismatch("linear map dimension " + std::to_string(r) + " out of range");
}

}  // namespace

LinearMap::LinearMap(int r) : r_(r) { check_dim(r); }

LinearMap LinearMap::identity(int r) {
  LinearMap m(r);
  for (int j = 0; j < r; ++j) m.cols_[j] = Point{1} << j;
  return m;
}

LinearMap LinearMap::from_columns(int r, std::span<const Point> columns) {
  LinearMap m(r);
  if (columns.size() != static_cast<std::size_t>(r)) throw DimensionMismatch("wrong number of columns");
  for (int j = 0; j < r; ++j) {
    if (columns[j] >> r) throw DimensionMismatch("column exceeds dimension");
    m.cols_[j] = columns[j];
  }
  return m;
}

LinearMap LinearMap::from_rows(int r, std::span<const Point> rows) {
  LinearMap m(r);
  if (rows.size() != static_cast<std::size_t>(r)) throw DimensionMismatch("wrong number of rows");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if ((rows[i] >> j) & 1U) m.cols_[j] |= Point{1} << i;
  return m;
}

LinearMap LinearMap::from_bit_matrix(const BitMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionMismatch("linear map needs a square matrix");
  const int r = static_cast<int>(b.rows());
  LinearMap m(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (b(i, j)) m.cols_[j] |= Point{1} << i;
  return m;
}

LinearMap LinearMap::block_diagonal(const LinearMap& upper, const LinearMap& lower) {
  const int r1 = upper.r_;
  LinearMap m(r1 + lower.r_);
  for (int j = 0; j < r1; ++j) m.cols_[j] = upper.cols_[j];
  for (int j = 0; j < lower.r_; ++j) m.cols_[r1 + j] = lower.cols_[j] << r1;
  return m;
}

Point LinearMap::row(int i) const {
  Point row = 0;
  for (int j = 0; j < r_; ++j)
    if (entry(i, j)) row |= Point{1} << j;
  return row;
}

int LinearMap::rank() const {
  std::array<Point, kMaxDim> basis{};
  int rank = 0;
  for (int j = 0; j < r_; ++j) {
    Point v = cols_[j];
    for (int k = 0; k < rank; ++k) v = std::min(v, v ^ basis[k]);
    if (v != 0) {
      basis[rank++] = v;
      // keep the basis sorted descending so the min-reduction above is a proper elimination
      for (int k = rank - 1; k > 0 && basis[k] > basis[k - 1]; --k) std::swap(basis[k], basis[k - 1]);
    }
  }
  return rank;
}

std::optional<LinearMap> LinearMap::inverse() const {
  // Gauss-Jordan on rows of [M | I], packed as (row << r) | identity row.
  std::array<std::uint64_t, kMaxDim> rows{};
  for (int i = 0; i < r_; ++i) rows[i] = (std::uint64_t{row(i)} << r_) | (std::uint64_t{1} << i);
  for (int c = 0; c < r_; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (r_ + c);
    int p = c;
    while (p < r_ && !(rows[p] & bit)) ++p;
    if (p == r_) return std::nullopt;
    std::swap(rows[p], rows[c]);
    for (int i = 0; i < r_; ++i)
      if (i != c && (rows[i] & bit)) rows[i] ^= rows[c];
  }
  std::array<Point, kMaxDim> inv_rows{};
  const std::uint64_t low = (std::uint64_t{1} << r_) - 1;
  for (int i = 0; i < r_; ++i) inv_rows[i] = static_cast<Point>(rows[i] & low);
  return from_rows(r_, std::span<const Point>(inv_rows.data(), static_cast<std::size_t>(r_)));
}

LinearMap LinearMap::transpose() const {
  LinearMap t(r_);
  for (int j = 0; j < r_; ++j) t.cols_[j] = row(j);
  return t;
}

std::uint64_t LinearMap::row_major_code() const {
  if (r_ > 8) throw DimensionMismatch("row-major code needs r <= 8");
  std::uint64_t code = 0;
  for (int i = 0; i < r_; ++i) code |= std::uint64_t{row(i)} << (i * r_);
  return code;
}

BitMatrix LinearMap::to_bit_matrix() const {
  BitMatrix m(static_cast<std::size_t>(r_), static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (entry(i, j)) m.set(i, j);
  return m;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.r_ != b.r_) throw DimensionMismatch("linear map dimensions differ");
  LinearMap c(a.r_);
  for (int j = 0; j < a.r_; ++j) c.cols_[j] = a(b.cols_[j]);
  return c;
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.shift ^ f.linear(g.shift), f.linear * g.linear};
}

AffineMap inverse(const AffineMap& f) {
  auto inv = f.linear.inverse();
  if (!inv) throw DimensionMismatch("affine map has a singular linear part");
  return {(*inv)(f.shift), *inv};
}

}  // namespace perfcode

#include "perfcode/bit_matrix.hpp"

#include <utility>

#include "perfcode/errors.hpp"

namespace perfcode {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitWord(cols)) {}

BitMatrix::BitMatrix(std::vector<BitWord> rows, std::size_t cols)
    : cols_(rows.empty() ? cols : rows.front().size()), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionMismatch("matrix rows have different lengths");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  std::vector<BitWord> words;
  words.reserve(rows.size());
  for (const auto& s : rows) words.push_back(BitWord::from_string(s));
  return BitMatrix(std::move(words));
}

void BitMatrix::append_row(const BitWord& row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DimensionMismatch("row length does not match matrix");
  rows_.push_back(row);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_[i].test(j)) t.set(j, i);
  return t;
}

BitWord BitMatrix::apply(const BitWord& x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length does not match matrix");
  BitWord y(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    if (rows_[i].dot(x)) y.set(i);
  return y;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimensions differ");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k)) c.row(i) ^= b.row(k);
  return c;
}

namespace {

// Gauss-Jordan on a copy; returns the reduced rows (zero rows removed) and pivot columns.
std::pair<std::vector<BitWord>, std::vector<std::size_t>> reduce_rows(std::vector<BitWord> rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].test(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != next && rows[i].test(c)) rows[i] ^= rows[next];
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return {std::move(rows), std::move(pivots)};
}

}  // namespace

std::size_t rank(const BitMatrix& m) { return reduce_rows(m.row_words(), m.cols()).first.size(); }

std::optional<BitMatrix> invert(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BitWord> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) aug.push_back(concat(m.row(i), BitWord::unit(n, i)));
  auto [reduced, pivots] = reduce_rows(std::move(aug), n);
  if (reduced.size() < n || pivots.size() < n || pivots.back() >= n) return std::nullopt;
  BitMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.row(i) = reduced[i].slice(n, n);
  return inv;
}

BitMatrix row_basis(const BitMatrix& m) {
  return BitMatrix(reduce_rows(m.row_words(), m.cols()).first, m.cols());
}

BitMatrix null_space(const BitMatrix& m) {
  const std::size_t n = m.cols();
  auto [reduced, pivots] = reduce_rows(m.row_words(), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  BitMatrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitWord v = BitWord::unit(n, free);
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (reduced[i].test(free)) v.set(pivots[i]);
    basis.append_row(v);
  }
  return basis;
}

BitWord SpanBuilder::reduce(BitWord v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.test(pivots_[i])) v ^= basis_[i];
  return v;
}

bool SpanBuilder::insert(BitWord v) {
  if (v.size() != length_) throw DimensionMismatch("vector length does not match span");
  v = reduce(std::move(v));
  if (!v.any()) return false;
  const std::size_t p = v.lowest_set();
  for (auto& b : basis_)
    if (b.test(p)) b ^= v;
  basis_.push_back(v);
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(BitWord v) const { return !reduce(std::move(v)).any(); }

}  // namespace perfcode

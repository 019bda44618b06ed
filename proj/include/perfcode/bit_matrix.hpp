#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfcode/bit_word.hpp"

namespace perfcode {

/// Dense row-major matrix over GF(2). Each row is a BitWord of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length; `cols` is needed when `rows` is empty.
  explicit BitMatrix(std::vector<BitWord> rows, std::size_t cols = 0);

  static BitMatrix identity(std::size_t n);
  /// Rows given as bitstrings; the first character of each is column 1.
  static BitMatrix from_strings(std::span<const std::string> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool operator()(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  const BitWord& row(std::size_t i) const { return rows_[i]; }
  BitWord& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitWord>& row_words() const { return rows_; }
  void append_row(const BitWord& row);

  BitMatrix transpose() const;
  /// M * x for a column vector x of length cols().
  BitWord apply(const BitWord& x) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitWord> rows_;
};

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

/// GF(2) row rank; `m` is not modified.
std::size_t rank(const BitMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> invert(const BitMatrix& m);

/// Reduced row echelon form with zero rows dropped (a basis of the row space).
BitMatrix row_basis(const BitMatrix& m);

/// Basis (as rows) of {x : m * x = 0}.
BitMatrix null_space(const BitMatrix& m);

/// Incremental GF(2) basis of a subspace, kept in reduced form by pivot column.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  /// Adds `v`; returns true when it enlarged the span.
  bool insert(BitWord v);
  bool contains(BitWord v) const;
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BitWord>& basis() const { return basis_; }

 private:
  BitWord reduce(BitWord v) const;

  std::size_t length_;
  std::vector<BitWord> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace perfcode

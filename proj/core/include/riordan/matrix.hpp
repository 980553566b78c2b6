#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Finite R x C window onto an (infinite) exact-rational matrix. Row-major,
/// bounds-checked access.
class MatrixWindow {
 public:
  MatrixWindow() : MatrixWindow(0, 0) {}
  MatrixWindow(std::size_t rows, std::size_t cols);
  /// Builds from explicit rows; ragged rows are zero-padded to the longest row.
  static MatrixWindow from_rows(const std::vector<std::vector<Rational>>& rows);
  static MatrixWindow identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j);
  const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }
  Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }

  bool is_lower_triangular() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
  MatrixWindow block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Submatrix on the given index lists (no ordering requirement).
  MatrixWindow select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  friend bool operator==(const MatrixWindow&, const MatrixWindow&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

MatrixWindow operator*(const MatrixWindow& a, const MatrixWindow& b);

/// Block-diagonal [A 0; 0 B].
MatrixWindow direct_sum(const MatrixWindow& a, const MatrixWindow& b);

/// Exact determinant by rational Gaussian elimination. Requires a square matrix.
Rational determinant(const MatrixWindow& m);

/// Right-aligned text table of fraction strings. With decimals >= 0 each entry
/// is followed by a rounded decimal for display.
std::string format_pretty(const MatrixWindow& m, int decimals = -1);

std::ostream& operator<<(std::ostream& os, const MatrixWindow& m);

}  // namespace riordan

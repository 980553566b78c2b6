#include "riordan/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

MatrixWindow::MatrixWindow(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

MatrixWindow MatrixWindow::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  MatrixWindow m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

MatrixWindow MatrixWindow::identity(std::size_t n) {
  MatrixWindow m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

const Rational& MatrixWindow::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::OutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") outside " + std::to_string(rows_) + "x" +
                                           std::to_string(cols_) + " window");
  }
  return data_[i * cols_ + j];
}

Rational& MatrixWindow::at(std::size_t i, std::size_t j) {
  return const_cast<Rational&>(std::as_const(*this).at(i, j));
}

bool MatrixWindow::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!at(i, j).is_zero()) return false;
    }
  }
  return true;
}

MatrixWindow MatrixWindow::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::OutOfRange, "block exceeds window bounds");
  }
  MatrixWindow b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  }
  return b;
}

MatrixWindow MatrixWindow::select(std::span<const std::size_t> row_idx,
                                  std::span<const std::size_t> col_idx) const {
  MatrixWindow s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
  }
  return s;
}

MatrixWindow operator*(const MatrixWindow& a, const MatrixWindow& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " by " +
                                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  MatrixWindow c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

MatrixWindow direct_sum(const MatrixWindow& a, const MatrixWindow& b) {
  MatrixWindow s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return s;
}

Rational determinant(const MatrixWindow& m) {
  if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square window");
  const std::size_t n = m.rows();
  MatrixWindow w = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && w(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(w(c, j), w(pivot, j));
      det = -det;
    }
    const Rational p = w(c, c);
    det *= p;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (w(r, c).is_zero()) continue;
      const Rational factor = w(r, c) / p;
      for (std::size_t j = c + 1; j < n; ++j) w(r, j) -= factor * w(c, j);
    }
  }
  return det;
}

std::string format_pretty(const MatrixWindow& m, int decimals) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s = m(i, j).to_string();
      if (decimals >= 0 && !m(i, j).is_integer()) s += " (~" + m(i, j).to_decimal(decimals) + ")";
      width = std::max(width, s.size());
      cells[i * m.cols() + j] = std::move(s);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& s = cells[i * m.cols() + j];
      os << (j ? "  " : " ") << std::string(width - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MatrixWindow& m) { return os << format_pretty(m); }

}  // namespace riordan

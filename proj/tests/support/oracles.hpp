#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan::testing {

// Determinant by the permutation expansion; independent of Gaussian elimination.
inline Rational leibniz_det(const MatrixWindow& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// a + b*s with s^2 = D, D not a rational square. Lets the two-root closed form
// of det T_n be evaluated exactly when the roots are irrational or complex.
struct QuadraticNumber {
  Rational a;
  Rational b;
  Rational D;

  QuadraticNumber operator+(const QuadraticNumber& o) const { return {a + o.a, b + o.b, D}; }
  QuadraticNumber operator-(const QuadraticNumber& o) const { return {a - o.a, b - o.b, D}; }
  QuadraticNumber operator*(const QuadraticNumber& o) const { return {a * o.a + b * o.b * D, a * o.b + b * o.a, D}; }
  QuadraticNumber pow(int n) const {
    QuadraticNumber r{Rational(1), Rational(0), D};
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
};

// (x1^(n+1) - x2^(n+1)) / (x1 - x2) with x1,2 = (a1 +- s)/2 and s^2 = a1^2 - 4 a0 a2.
// The difference of powers is (c)*s for rational c, and x1 - x2 = s, so the
// quotient is c; returns nullopt if the rational part fails to vanish.
inline std::optional<Rational> det_T_quadratic_field(const Rational& a0, const Rational& a1, const Rational& a2,
                                                      int n) {
  const Rational D = a1 * a1 - 4 * a0 * a2;
  const QuadraticNumber x1{a1 / 2, Rational(1, 2), D};
  const QuadraticNumber x2{a1 / 2, Rational(-1, 2), D};
  const QuadraticNumber diff = x1.pow(n + 1) - x2.pow(n + 1);
  if (!diff.a.is_zero()) return std::nullopt;
  return diff.b;
}

// Row n+1 = row n times J on a lower-triangular window: the production-iteration oracle.
inline MatrixWindow iterate_production(const MatrixWindow& j, std::size_t rows, const Rational& d0) {
  MatrixWindow m(rows, rows);
  m(0, 0) = d0;
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t k = 0; k < rows; ++k) {
      Rational acc(0);
      for (std::size_t l = 0; l <= i && l < j.rows(); ++l) {
        if (k < j.cols()) acc += m(i, l) * j(l, k);
      }
      m(i + 1, k) = acc;
    }
  }
  return m;
}

}  // namespace riordan::testing

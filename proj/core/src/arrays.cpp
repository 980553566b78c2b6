#include "riordan/arrays.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "riordan/error.hpp"

namespace riordan {

namespace {

bool has_delta_shape(const Series& f) { return f.order() >= 1 && f[0].is_zero(); }

void require_order(const Series& s, std::size_t rows, const char* name) {
  if (rows == 0) throw Error(ErrorCode::InvalidSpec, "window needs at least one row");
  if (s.order() < static_cast<int>(rows) - 1) {
    throw Error(ErrorCode::InsufficientOrder, std::string(name) + " is known to order " +
                                                  std::to_string(s.order()) + " but the window needs " +
                                                  std::to_string(rows - 1));
  }
}

void fill_column(MatrixWindow& m, std::size_t j, const Series& column) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = column[static_cast<int>(i)];
}

// Columns first, then t*g, t*g*f, ... each truncated to rows - 1.
MatrixWindow almost_window(const Series& d, const Series& g, const Series& f, std::size_t rows,
                           std::size_t cols) {
  const int n = static_cast<int>(rows) - 1;
  MatrixWindow m(rows, cols);
  if (cols == 0) return m;
  fill_column(m, 0, d.truncate(n));
  const Series fn = f.truncate(n);
  Series column = shift_t(g.truncate(n), 1);
  for (std::size_t j = 1; j < cols && j <= rows; ++j) {
    fill_column(m, j, column);
    column = mul(column, fn);
  }
  return m;
}

MatrixWindow riordan_window(const Series& g, const Series& f, std::size_t rows, std::size_t cols) {
  const int n = static_cast<int>(rows) - 1;
  MatrixWindow m(rows, cols);
  const Series fn = f.truncate(n);
  Series column = g.truncate(n);
  for (std::size_t j = 0; j < cols && j < rows; ++j) {
    fill_column(m, j, column);
    column = mul(column, fn);
  }
  return m;
}

MatrixWindow quasi_window(const Series& g, const Series& f, std::size_t rows, std::size_t cols) {
  const int n = static_cast<int>(rows) - 1;
  MatrixWindow m(rows, cols);
  if (cols == 0) return m;
  fill_column(m, 0, g.truncate(n));
  Series column = f.truncate(n);
  for (std::size_t j = 1; j < cols && j <= rows; ++j) {
    fill_column(m, j, column);
    column = shift_t(column, 1);
  }
  return m;
}

// u - u(0) divided by t, then multiplied back after the product: keeps the
// order honest when one factor has a forced zero constant term.
Series times_t_times(const Series& a_over_t, const Series& b_over_t) {
  return shift_up(mul(a_over_t, b_over_t), 1);
}

}  // namespace

bool AlmostRiordanSpec::is_constructible() const {
  return d[0].sign() > 0 && g[0].sign() > 0 && has_delta_shape(f) && f[1].sign() > 0;
}

bool AlmostRiordanSpec::is_normalized() const {
  return is_constructible() && d[0] == 1 && g[0] == 1 && f[1] == 1;
}

int AlmostRiordanSpec::order() const { return std::min({d.order(), g.order(), f.order()}); }

bool QuasiRiordanSpec::is_constructible() const { return g[0].sign() > 0 && f[0].is_zero(); }

bool QuasiRiordanSpec::is_normalized() const {
  return g[0] == 1 && has_delta_shape(f) && !f[1].is_zero();
}

int QuasiRiordanSpec::order() const { return std::min(g.order(), f.order()); }

bool RiordanSpec::is_valid() const { return !g[0].is_zero() && has_delta_shape(f) && !f[1].is_zero(); }

int RiordanSpec::order() const { return std::min(g.order(), f.order()); }

MatrixWindow build_almost(const AlmostRiordanSpec& spec, std::size_t rows, std::size_t cols) {
  if (!spec.is_constructible()) {
    throw Error(ErrorCode::InvalidSpec, "almost-Riordan spec needs d(0) > 0, g(0) > 0, f(0) = 0, f'(0) > 0");
  }
  require_order(spec.d, rows, "d");
  require_order(spec.g, rows, "g");
  require_order(spec.f, rows, "f");
  return almost_window(spec.d, spec.g, spec.f, rows, cols);
}

MatrixWindow build_almost_relaxed(const AlmostRiordanSpec& spec, std::size_t rows, std::size_t cols) {
  if (!spec.f[0].is_zero()) throw Error(ErrorCode::InvalidSpec, "almost-Riordan spec needs f(0) = 0");
  require_order(spec.d, rows, "d");
  require_order(spec.g, rows, "g");
  require_order(spec.f, rows, "f");
  return almost_window(spec.d, spec.g, spec.f, rows, cols);
}

MatrixWindow build_riordan(const RiordanSpec& spec, std::size_t rows, std::size_t cols) {
  if (!spec.is_valid()) {
    throw Error(ErrorCode::InvalidSpec, "Riordan spec needs g(0) != 0, f(0) = 0, f'(0) != 0");
  }
  require_order(spec.g, rows, "g");
  require_order(spec.f, rows, "f");
  return riordan_window(spec.g, spec.f, rows, cols);
}

MatrixWindow build_quasi(const QuasiRiordanSpec& spec, std::size_t rows, std::size_t cols) {
  if (!spec.is_constructible()) {
    throw Error(ErrorCode::InvalidSpec, "quasi-Riordan spec needs g(0) > 0 and f(0) = 0");
  }
  require_order(spec.g, rows, "g");
  require_order(spec.f, rows, "f");
  return quasi_window(spec.g, spec.f, rows, cols);
}

AlmostRiordanSpec mult_almost(const AlmostRiordanSpec& x, const AlmostRiordanSpec& y) {
  if (!x.is_normalized() || !y.is_normalized()) {
    throw Error(ErrorCode::NotGroupElement, "almost-Riordan product needs normalized factors");
  }
  const Series& a = x.d;
  const Series& g = x.g;
  const Series& f = x.f;
  const Series& b = y.d;
  const Series& d = y.g;
  const Series& h = y.f;

  const Series g_over_f_over_t = div(g, drop_t(f, 1));  // t*g/f
  const Series b_of_f_minus_1 = drop_t(compose(b, f) - Series::constant(1, b.order()), 1);
  AlmostRiordanSpec product;
  product.d = add(a, times_t_times(g_over_f_over_t, b_of_f_minus_1));
  product.g = mul(g, compose(d, f));
  product.f = compose(h, f);
  return product;
}

QuasiRiordanSpec mult_quasi(const QuasiRiordanSpec& x, const QuasiRiordanSpec& y) {
  if (!x.is_normalized() || !y.is_normalized()) {
    throw Error(ErrorCode::InvalidSpec, "quasi-Riordan product needs g(0) = 1, f(0) = 0, f'(0) != 0");
  }
  const Series f_over_t = drop_t(x.f, 1);
  const Series d_minus_1 = drop_t(y.g - Series::constant(1, y.g.order()), 1);
  QuasiRiordanSpec product;
  product.g = add(x.g, times_t_times(f_over_t, d_minus_1));
  product.f = times_t_times(f_over_t, drop_t(y.f, 1));
  return product;
}

Series apply_quasi(const QuasiRiordanSpec& q, const Series& u) {
  if (!q.f[0].is_zero()) throw Error(ErrorCode::InvalidSpec, "quasi-Riordan spec needs f(0) = 0");
  const Rational u0 = u[0];
  const Series tail = drop_t(u - Series::constant(u0, u.order()), 1);
  return add(scale(q.g, u0), times_t_times(drop_t(q.f, 1), tail));
}

bool verify_quasi_factorization(const RiordanSpec& spec, std::size_t n) {
  if (!spec.is_valid()) throw Error(ErrorCode::InvalidSpec, "Riordan spec needs g(0) != 0, f(0) = 0, f'(0) != 0");
  require_order(spec.g, n, "g");
  require_order(spec.f, n, "f");
  const MatrixWindow lhs = riordan_window(spec.g, spec.f, n, n);
  const MatrixWindow quasi = quasi_window(spec.g, spec.f, n, n);
  const MatrixWindow one = MatrixWindow::identity(1);
  const MatrixWindow rhs =
      n == 1 ? quasi * one : quasi * direct_sum(one, riordan_window(spec.g, spec.f, n - 1, n - 1));
  return lhs == rhs;
}

SemidirectFactors semidirect_factor(const AlmostRiordanSpec& spec) {
  if (!spec.is_constructible()) throw Error(ErrorCode::InvalidSpec, "semidirect factorization needs a valid spec");
  const int n = spec.order();
  SemidirectFactors out;
  out.quasi = QuasiRiordanSpec{spec.d, shift_up(spec.g, 1)};
  out.almost = AlmostRiordanSpec{Series::constant(1, n), Series::constant(1, n), spec.f};
  return out;
}

}  // namespace riordan

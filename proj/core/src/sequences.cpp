#include "riordan/sequences.hpp"

#include <algorithm>
#include <string>

#include "riordan/error.hpp"

namespace riordan {

namespace {

Series truncated(const Series& s, int order, const char* name) {
  if (s.order() < order) {
    throw Error(ErrorCode::InsufficientOrder, std::string(name) + " is known to order " +
                                                  std::to_string(s.order()) + ", need " + std::to_string(order));
  }
  return s.truncate(order);
}

Rational coefficient_or_zero(const Series& s, long k) {
  if (k < 0) return Rational(0);
  return s[static_cast<int>(k)];
}

}  // namespace

int AZWTriple::order() const { return std::min({A.order(), Z.order(), W.order()}); }

AZWTriple TridiagonalProduction::to_azw(int order) const {
  return AZWTriple{Series::polynomial({a0, a1, a2}, order), Series::polynomial({z0, z1, z2}, order),
                   Series::polynomial({w0, w1}, order)};
}

AZWTriple azw_from_almost(const AlmostRiordanSpec& spec, int order) {
  if (spec.d[0].is_zero() || spec.g[0].is_zero()) {
    throw Error(ErrorCode::InvalidSpec, "A/Z/W need d(0) != 0 and g(0) != 0");
  }
  const Series& d = spec.d;
  const Series& g = spec.g;
  const Series fbar = reversion(spec.f);
  const Series fbar_over_t = drop_t(fbar, 1);
  const Rational d0 = d[0];
  const Rational z0 = g[0] / d0;
  const Rational w0 = d.order() >= 1 ? d[1] / d0 : Rational(0);

  const Series d_fbar = compose(d, fbar);
  const Series g_fbar = compose(g, fbar);

  const Series A = inverse(fbar_over_t);

  // g(fbar) - z0 d(fbar) vanishes at 0, so one t cancels against fbar.
  const Series z_num = drop_t(g_fbar - scale(d_fbar, z0), 1);
  const Series Z = add(Series::constant(z0, z_num.order() + 1),
                       shift_up(div(z_num, mul(fbar_over_t, g_fbar)), 1));

  // d(fbar) - d0 - w0 fbar d(fbar) vanishes to second order.
  const Series w_num = drop_t(d_fbar - Series::constant(d0, d_fbar.order()) - scale(mul(fbar, d_fbar), w0), 2);
  const Series W = add(Series::constant(w0, w_num.order() + 1),
                       shift_up(div(w_num, mul(mul(fbar_over_t, fbar_over_t), g_fbar)), 1));

  return AZWTriple{truncated(A, order, "A"), truncated(Z, order, "Z"), truncated(W, order, "W")};
}

AZWTriple azw_from_quasi(const QuasiRiordanSpec& spec, int order) {
  const Series& d = spec.g;
  const Series& G = spec.f;
  if (d[0].is_zero() || G.order() < 1 || !G[0].is_zero() || G[1].is_zero()) {
    throw Error(ErrorCode::InvalidSpec, "A/Z/W of [d, G] need d(0) != 0, G(0) = 0, G'(0) != 0");
  }
  const Rational d0 = d[0];
  const Rational z0 = G[1] / d0;
  const Rational w0 = d.order() >= 1 ? d[1] / d0 : Rational(0);
  const Series G_over_t = drop_t(G, 1);
  const Series Z = add(Series::constant(z0, G_over_t.order()), div(G_over_t - scale(d, z0), G_over_t));
  const Series d_minus_d0_over_t = drop_t(d - Series::constant(d0, d.order()), 1);
  const Series W = add(Series::constant(w0, G_over_t.order()), div(d_minus_d0_over_t - scale(d, w0), G_over_t));
  const Series A = Series::constant(1, std::max(order, 0));
  return AZWTriple{A, truncated(Z, order, "Z"), truncated(W, order, "W")};
}

MatrixWindow production_from_azw(const AZWTriple& azw, std::size_t rows, std::size_t cols) {
  MatrixWindow j(rows, cols);
  if (rows == 0) return j;
  const int need = static_cast<int>(rows) - 1;
  if (cols > 0) truncated(azw.W, need, "W");
  if (cols > 1) truncated(azw.Z, need, "Z");
  if (cols > 2) truncated(azw.A, std::max(need - 1, 0), "A");
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      const int ii = static_cast<int>(i);
      if (k == 0) {
        j(i, k) = azw.W[ii];
      } else if (k == 1) {
        j(i, k) = azw.Z[ii];
      } else {
        j(i, k) = coefficient_or_zero(azw.A, static_cast<long>(i) - static_cast<long>(k) + 1);
      }
    }
  }
  return j;
}

MatrixWindow production_from_azw(const AZWTriple& azw, std::size_t n) {
  return production_from_azw(azw, n, n);
}

MatrixWindow tridiagonal_window(const TridiagonalProduction& p, std::size_t n) {
  return production_from_azw(p.to_azw(static_cast<int>(std::max<std::size_t>(n, 3))), n, n);
}

bool check_production_identity(const MatrixWindow& m, const MatrixWindow& j) {
  const std::size_t n = j.rows();
  if (!j.is_square() || m.rows() < n + 1 || m.cols() < n) {
    throw Error(ErrorCode::ShapeMismatch, "production identity needs an (n+1) x n window and an n x n J");
  }
  return m.block(0, 0, n, n) * j == m.block(1, 0, n, n);
}

bool check_production_identity(const AlmostRiordanSpec& spec, const AZWTriple& azw, std::size_t n) {
  const MatrixWindow m = build_almost_relaxed(spec, n + 1, n);
  return check_production_identity(m, production_from_azw(azw, n));
}

MatrixWindow extract_production(const MatrixWindow& m) {
  if (!m.is_square() || !m.is_lower_triangular()) {
    throw Error(ErrorCode::ShapeMismatch, "extract_production needs a square lower-triangular window");
  }
  const std::size_t r = m.rows();
  for (std::size_t i = 0; i < r; ++i) {
    if (m(i, i).is_zero()) {
      throw Error(ErrorCode::SingularDiagonal, "zero diagonal entry at " + std::to_string(i));
    }
  }
  if (r == 0) return MatrixWindow(0, 0);
  MatrixWindow j(r - 1, r);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      Rational acc = m(i + 1, k);
      for (std::size_t l = 0; l < i; ++l) acc -= m(i, l) * j(l, k);
      j(i, k) = acc / m(i, i);
    }
  }
  return j;
}

AlmostRiordanSpec recover_from_tridiagonal(const TridiagonalProduction& p, const Rational& d0, int order) {
  const Series t = Series::identity(order);
  Series f;
  if (!p.a2.is_zero()) {
    // a2 t f^2 + (a1 t - 1) f + a0 t = 0, branch with f(0) = 0.
    const int work = order + 1;
    const Series disc = Series::polynomial({Rational(1), -2 * p.a1, p.a1 * p.a1 - 4 * p.a0 * p.a2}, work);
    const Series num = Series::polynomial({Rational(1), -p.a1}, work) - sqrt(disc);
    f = scale(drop_t(num, 1), Rational(1) / (2 * p.a2));
  } else {
    f = div(scale(t, p.a0), Series::polynomial({Rational(1), -p.a1}, order));
  }
  const Series tf = shift_t(f, 1);
  const Series F = Series::polynomial({Rational(1), -(p.w0 + p.z1), p.w0 * p.z1 - p.w1 * p.z0}, order) -
                   scale(mul(Series::polynomial({Rational(1), -p.w0}, order), tf), p.z2);
  if (F[0].is_zero()) throw Error(ErrorCode::ZeroDenominator, "recovery denominator vanishes at 0");
  AlmostRiordanSpec spec;
  spec.d = scale(div(Series::polynomial({Rational(1), -p.z1}, order) - scale(tf, p.z2), F), d0);
  spec.g = scale(inverse(F), d0 * p.z0);
  spec.f = f;
  return spec;
}

}  // namespace riordan

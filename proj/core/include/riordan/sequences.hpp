#pragma once

#include <cstddef>

#include "riordan/arrays.hpp"
#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Characteristic sequences of an almost-Riordan array: column j >= 2 of the
/// production matrix follows A, column 1 follows Z, column 0 follows W.
struct AZWTriple {
  Series A;
  Series Z;
  Series W;

  const Rational& z0() const { return Z[0]; }
  const Rational& w0() const { return W[0]; }
  int order() const;

  friend bool operator==(const AZWTriple&, const AZWTriple&) = default;
};

/// A = a0 + a1 t + a2 t^2, Z = z0 + z1 t + z2 t^2, W = w0 + w1 t.
struct TridiagonalProduction {
  Rational a0, a1, a2;
  Rational z0, z1, z2;
  Rational w0, w1;

  /// Polynomials A, Z, W padded to `order`.
  AZWTriple to_azw(int order) const;

  friend bool operator==(const TridiagonalProduction&, const TridiagonalProduction&) = default;
};

/// A = t/fbar, Z = z0 + t(g(fbar) - z0 d(fbar))/(fbar g(fbar)),
/// W = w0 + t(d(fbar) - d0 - w0 fbar d(fbar))/(fbar^2 g(fbar)), with fbar the
/// compositional inverse of f, z0 = g0/d0 and w0 = d1/d0. The input series must
/// be known to order + 1; the result is truncated to `order`.
AZWTriple azw_from_almost(const AlmostRiordanSpec& spec, int order);

/// For [d, G] (column 0 = d, column 1 = G): A = 1, Z = z0 + (G - z0 t d)/G,
/// W = w0 + (d - d0 - w0 t d)/G with z0 = G1/d0 and w0 = d1/d0.
AZWTriple azw_from_quasi(const QuasiRiordanSpec& spec, int order);

/// J(i,0) = W_i, J(i,1) = Z_i, J(i,j) = A_(i-j+1) for j >= 2.
MatrixWindow production_from_azw(const AZWTriple& azw, std::size_t rows, std::size_t cols);
MatrixWindow production_from_azw(const AZWTriple& azw, std::size_t n);

/// The n x n tridiagonal production window of p.
MatrixWindow tridiagonal_window(const TridiagonalProduction& p, std::size_t n);

/// True iff M J equals M with its first row deleted on the leading n x n block.
bool check_production_identity(const AlmostRiordanSpec& spec, const AZWTriple& azw, std::size_t n);
/// Same identity for explicit windows: m needs n + 1 rows and n columns, j is n x n.
bool check_production_identity(const MatrixWindow& m, const MatrixWindow& j);

/// Solves M J = M-shifted by forward substitution. An R x R lower-triangular M
/// determines the (R-1) x R window of J. Throws SingularDiagonal.
MatrixWindow extract_production(const MatrixWindow& m);

/// Rebuilds (d | g, f) with d(0) = d0 from tridiagonal production data.
AlmostRiordanSpec recover_from_tridiagonal(const TridiagonalProduction& p, const Rational& d0, int order);

}  // namespace riordan

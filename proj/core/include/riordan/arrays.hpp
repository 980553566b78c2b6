#pragma once

#include <cstddef>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// (d | g, f): column 0 generated by d, column j >= 1 by t*g*f^(j-1).
///
/// Two validity tiers. Constructible (enough to build a window): d(0) > 0,
/// g(0) > 0, f(0) = 0, f'(0) > 0. Normalized (a group element): additionally
/// d(0) = g(0) = f'(0) = 1.
struct AlmostRiordanSpec {
  Series d;
  Series g;
  Series f;

  bool is_constructible() const;
  bool is_normalized() const;
  int order() const;
};

/// [g, f]: columns g, f, t*f, t^2*f, ...  Constructible when g(0) > 0 and
/// f(0) = 0; normalized when g(0) = 1, f(0) = 0 and f'(0) != 0.
struct QuasiRiordanSpec {
  Series g;
  Series f;

  bool is_constructible() const;
  bool is_normalized() const;
  int order() const;
};

/// (g, f): column j generated by g*f^j. Valid when g(0) != 0, f(0) = 0, f'(0) != 0.
struct RiordanSpec {
  Series g;
  Series f;

  bool is_valid() const;
  int order() const;
};

/// Windows need every generating series known to order rows - 1, otherwise
/// InsufficientOrder is thrown. Invalid specs throw InvalidSpec.
MatrixWindow build_almost(const AlmostRiordanSpec& spec, std::size_t rows, std::size_t cols);
/// Same columns without the sign checks on d(0), g(0), f'(0); still needs
/// f(0) = 0 and enough order.
MatrixWindow build_almost_relaxed(const AlmostRiordanSpec& spec, std::size_t rows, std::size_t cols);
MatrixWindow build_riordan(const RiordanSpec& spec, std::size_t rows, std::size_t cols);
MatrixWindow build_quasi(const QuasiRiordanSpec& spec, std::size_t rows, std::size_t cols);

/// (a|g,f)(b|d,h) = (a + (tg/f)(b(f) - 1) | g*d(f), h(f)). Both factors must be
/// normalized (NotGroupElement otherwise).
AlmostRiordanSpec mult_almost(const AlmostRiordanSpec& x, const AlmostRiordanSpec& y);

/// [g,f][d,h] = [g + (f/t)(d - 1), f*h/t]. Both factors must be normalized
/// (InvalidSpec otherwise).
QuasiRiordanSpec mult_quasi(const QuasiRiordanSpec& x, const QuasiRiordanSpec& y);

/// [g,f] u = g*u(0) + (f/t)(u - u(0)); the series form of window * coefficient vector.
Series apply_quasi(const QuasiRiordanSpec& q, const Series& u);

/// Checks (g,f) = [g,f] ([1] (+) (g,f)) on n x n windows.
bool verify_quasi_factorization(const RiordanSpec& spec, std::size_t n);

struct SemidirectFactors {
  QuasiRiordanSpec quasi;     // [d, t*g]
  AlmostRiordanSpec almost;   // (1 | 1, f)
};

/// (d|g,f) = [d, tg] (1|1,f) for any constructible spec.
SemidirectFactors semidirect_factor(const AlmostRiordanSpec& spec);

}  // namespace riordan

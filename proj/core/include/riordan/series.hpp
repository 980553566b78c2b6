#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N with exact
/// coefficients. N is the truncation order: coefficients above N are unknown,
/// not zero, so every operation reports the order up to which its result is
/// exact and never reads past it.
class Series {
 public:
  /// The zero series of order 0.
  Series();
  /// Takes coefficients 0..N; the order is coeffs.size() - 1 (must be non-empty).
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(int order);
  static Series constant(const Rational& c, int order);
  /// The series t (identity for composition).
  static Series identity(int order);
  /// Polynomial with the given low coefficients, zero-padded up to `order`.
  static Series polynomial(std::initializer_list<Rational> low, int order);
  static Series polynomial(std::span<const Rational> low, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt if all known coefficients vanish.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Drops coefficients above `new_order` (which must not exceed order()).
  Series truncate(int new_order) const;

  std::string to_string() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Series& s);

// Binary operations produce order = min(a.order(), b.order()).
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Series& a, const Rational& c);
Series mul(const Series& a, const Series& b);

/// a / b. Throws DivByNonUnit when b(0) = 0.
Series div(const Series& a, const Series& b);
/// 1 / a. Throws DivByNonUnit when a(0) = 0.
Series inverse(const Series& a);
/// a^n for any integer n (negative n requires a unit).
Series pow(const Series& a, long n);

/// outer(inner(t)). Throws InnerNotDelta when inner(0) != 0.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse: compose(f, reversion(f)) = t. Throws NotInvertible
/// unless f(0) = 0 and f'(0) != 0. Solved coefficient by coefficient.
Series reversion(const Series& f);

/// s with s*s = a and s(0) >= 0. Throws NonSquareConstantTerm unless a(0) is the
/// square of a nonzero rational.
Series sqrt(const Series& a);

/// Multiplies by t^k keeping the order: the top k coefficients fall off.
Series shift_t(const Series& a, int k);
/// Multiplies by t^k and extends the order by k (the product is known that far).
Series shift_up(const Series& a, int k);
/// Divides by t^k; the first k coefficients must vanish. Order drops by k.
/// Throws UncanceledPole otherwise.
Series drop_t(const Series& a, int k);

/// [t^k] a. Throws OutOfRange if k exceeds the truncation order.
Rational coeff(const Series& a, int k);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }
inline Series operator*(const Rational& c, const Series& a) { return scale(a, c); }

}  // namespace riordan

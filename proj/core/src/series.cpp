#include "riordan/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::InsufficientOrder, "negative truncation order");
}

}  // namespace

Series::Series() : coeffs_{Rational(0)} {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InsufficientOrder, "series needs at least one coefficient");
}

Series Series::zero(int order) {
  require_order(order);
  return Series(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

Series Series::constant(const Rational& c, int order) {
  Series s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::identity(int order) {
  Series s = zero(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::polynomial(std::initializer_list<Rational> low, int order) {
  return polynomial(std::span<const Rational>(low.begin(), low.size()), order);
}

Series Series::polynomial(std::span<const Rational> low, int order) {
  Series s = zero(order);
  for (std::size_t k = 0; k < low.size(); ++k) {
    if (static_cast<int>(k) > order) {
      if (!low[k].is_zero()) {
        throw Error(ErrorCode::InsufficientOrder, "polynomial degree exceeds truncation order");
      }
      continue;
    }
    s.coeffs_[k] = low[k];
  }
  return s;
}

const Rational& Series::operator[](int k) const {
  if (k < 0 || k > order()) {
    throw Error(ErrorCode::OutOfRange, "coefficient index " + std::to_string(k) +
                                           " outside truncation order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

std::optional<int> Series::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return std::nullopt;
}

Series Series::truncate(int new_order) const {
  require_order(new_order);
  if (new_order > order()) {
    throw Error(ErrorCode::InsufficientOrder, "cannot extend order " + std::to_string(order()) +
                                                  " to " + std::to_string(new_order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

std::string Series::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    const Rational& c = s[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os << " + O(t^" << s.order() + 1 << ")";
}

Series add(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return Series(std::move(c));
}

Series neg(const Series& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return Series(std::move(c));
}

Series scale(const Series& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(c));
}

Series div(const Series& a, const Series& b) {
  if (b[0].is_zero()) throw Error(ErrorCode::DivByNonUnit, "divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  const Rational inv_b0 = Rational(1) / b[0];
  for (int k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (int j = 1; j <= k; ++j) {
      if (!b[j].is_zero()) acc -= b[j] * q[k - j];
    }
    q[k] = acc * inv_b0;
  }
  return Series(std::move(q));
}

Series inverse(const Series& a) { return div(Series::constant(1, a.order()), a); }

Series pow(const Series& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Series compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero()) throw Error(ErrorCode::InnerNotDelta, "inner series has nonzero constant term");
  const int n = std::min(outer.order(), inner.order());
  const Series in = inner.truncate(n);
  Series result = Series::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    result = mul(result, in);
    std::vector<Rational> c(result.coeffs().begin(), result.coeffs().end());
    c[0] += outer[k];
    result = Series(std::move(c));
  }
  return result;
}

Series reversion(const Series& f) {
  const int n = f.order();
  if (n < 1 || !f[0].is_zero() || f[1].is_zero()) {
    throw Error(ErrorCode::NotInvertible, "reversion needs f(0) = 0 and f'(0) != 0");
  }
  // powers[k][m] = [t^m] g^k for the partial inverse g; [t^m] g^k only involves
  // g_1..g_{m-k+1}, so column m of the table is final once g_{m-1} is known.
  std::vector<std::vector<Rational>> powers(
      static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  const Rational inv_f1 = Rational(1) / f[1];
  g[1] = inv_f1;
  powers[1][1] = g[1];
  for (int m = 2; m <= n; ++m) {
    Rational acc;
    for (int k = 2; k <= m; ++k) {
      Rational pk;
      for (int j = 1; j <= m - k + 1; ++j) {
        if (!g[j].is_zero()) pk += g[j] * powers[k - 1][m - j];
      }
      powers[k][m] = pk;
      if (!f[k].is_zero()) acc += f[k] * pk;
    }
    g[m] = -acc * inv_f1;
    powers[1][m] = g[m];
  }
  return Series(std::move(g));
}

Series sqrt(const Series& a) {
  const auto root = a[0].exact_sqrt();
  if (!root || root->is_zero()) {
    throw Error(ErrorCode::NonSquareConstantTerm,
                "constant term " + a[0].to_string() + " is not the square of a nonzero rational");
  }
  const int n = a.order();
  std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
  s[0] = *root;
  const Rational inv_two_s0 = Rational(1) / (Rational(2) * s[0]);
  for (int k = 1; k <= n; ++k) {
    Rational acc = a[k];
    for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc * inv_two_s0;
  }
  return Series(std::move(s));
}

Series shift_t(const Series& a, int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "shift_t needs k >= 0");
  const int n = a.order();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = k; i <= n; ++i) c[i] = a[i - k];
  return Series(std::move(c));
}

Series shift_up(const Series& a, int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "shift_up needs k >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(a.order() + k) + 1);
  for (int i = 0; i <= a.order(); ++i) c[i + k] = a[i];
  return Series(std::move(c));
}

Series drop_t(const Series& a, int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "drop_t needs k >= 0");
  if (k > a.order()) {
    throw Error(ErrorCode::InsufficientOrder, "dividing by t^" + std::to_string(k) +
                                                  " exhausts order " + std::to_string(a.order()));
  }
  for (int i = 0; i < k; ++i) {
    if (!a[i].is_zero()) {
      throw Error(ErrorCode::UncanceledPole, "coefficient of t^" + std::to_string(i) +
                                                 " is nonzero; cannot divide by t^" + std::to_string(k));
    }
  }
  return Series(std::vector<Rational>(a.coeffs().begin() + k, a.coeffs().end()));
}

Rational coeff(const Series& a, int k) { return a[k]; }

}  // namespace riordan

#include "riordan/tp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "riordan/error.hpp"

namespace riordan {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    const std::uint64_t r_div = r / g;
    const std::uint64_t i_div = i / g;
    r = saturating_mul(r_div, num / i_div);
    if (r == kSaturated) return r;
  }
  return r;
}

// Advances a strictly increasing combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k, std::size_t offset = 0) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = offset + i;
  return idx;
}

bool is_tridiagonal(const MatrixWindow& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if ((k + 1 < i || k > i + 1) && !m(i, k).is_zero()) return false;
    }
  }
  return true;
}

bool all_nonnegative(const TridiagonalProduction& p) {
  for (const Rational* x : {&p.a0, &p.a1, &p.a2, &p.z0, &p.z1, &p.z2, &p.w0, &p.w1}) {
    if (x->sign() < 0) return false;
  }
  return true;
}

}  // namespace

std::string_view verdict_name(TPVerdict v) { return v == TPVerdict::WindowTP ? "WindowTP" : "NotTP"; }

std::string_view strategy_name(MinorStrategy s) {
  switch (s) {
    case MinorStrategy::All:
      return "all";
    case MinorStrategy::ContiguousRows:
      return "contiguous_rows";
    case MinorStrategy::Jacobi:
      return "jacobi";
  }
  return "all";
}

MinorStrategy parse_strategy(std::string_view text) {
  if (text == "all") return MinorStrategy::All;
  if (text == "contiguous_rows") return MinorStrategy::ContiguousRows;
  if (text == "jacobi") return MinorStrategy::Jacobi;
  throw Error(ErrorCode::ParseError, "unknown strategy '" + std::string(text) + "'");
}

std::string_view theorem_verdict_name(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::TP:
      return "TP";
    case TheoremVerdict::NotTP:
      return "NotTP";
    case TheoremVerdict::Inapplicable:
      return "Inapplicable";
  }
  return "Inapplicable";
}

std::string_view condition_verdict_name(ConditionVerdict v) {
  switch (v) {
    case ConditionVerdict::Met:
      return "sufficient-condition met";
    case ConditionVerdict::NotMet:
      return "sufficient-condition not met";
    case ConditionVerdict::Inapplicable:
      return "Inapplicable";
  }
  return "Inapplicable";
}

Rational minor(const MatrixWindow& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::BadIndexSets, "row and column index lists differ in length");
  auto check = [](std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= bound) throw Error(ErrorCode::BadIndexSets, std::string(what) + " index out of bounds");
      if (i > 0 && idx[i] <= idx[i - 1]) {
        throw Error(ErrorCode::BadIndexSets, std::string(what) + " indices must be strictly increasing");
      }
    }
  };
  check(rows, m.rows(), "row");
  check(cols, m.cols(), "column");
  if (rows.empty()) return Rational(1);
  return determinant(m.select(rows, cols));
}

std::uint64_t count_minors(std::size_t rows, std::size_t cols, int max_order, MinorStrategy strategy) {
  std::uint64_t total = 0;
  for (int k = 1; k <= max_order; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const std::uint64_t row_sets =
        strategy == MinorStrategy::All ? binomial(rows, kk) : (rows >= kk ? rows - kk + 1 : 0);
    total = saturating_add(total, saturating_mul(row_sets, binomial(cols, kk)));
  }
  return total;
}

TPReport tp_check(const MatrixWindow& m, int max_order, MinorStrategy strategy, std::uint64_t max_minors) {
  if (strategy == MinorStrategy::Jacobi) {
    throw Error(ErrorCode::InvalidSpec, "use jacobi_tp_check for the jacobi strategy");
  }
  if (max_order < 1 || static_cast<std::size_t>(max_order) > std::min(m.rows(), m.cols())) {
    throw Error(ErrorCode::OutOfRange, "max_order must lie in 1..min(rows, cols)");
  }
  const std::uint64_t total = count_minors(m.rows(), m.cols(), max_order, strategy);
  if (total > max_minors) {
    throw Error(ErrorCode::OutOfRange, std::to_string(total) + " minors exceed the cap of " + std::to_string(max_minors));
  }
  TPReport report;
  report.checked_order = max_order;
  report.strategy = strategy;
  for (int k = 1; k <= max_order; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> rows = first_combination(kk);
    do {
      std::vector<std::size_t> cols = first_combination(kk);
      do {
        ++report.minors_checked;
        Rational value = minor(m, rows, cols);
        if (value.sign() < 0) {
          report.verdict = TPVerdict::NotTP;
          report.witness = MinorWitness{rows, cols, std::move(value)};
          return report;
        }
      } while (next_combination(cols, m.cols()));
      if (strategy == MinorStrategy::ContiguousRows) {
        if (rows.back() + 1 >= m.rows()) break;
        rows = first_combination(kk, rows.front() + 1);
      } else if (!next_combination(rows, m.rows())) {
        break;
      }
    } while (true);
  }
  return report;
}

TPReport jacobi_tp_check(const MatrixWindow& j, int n_max) {
  if (!j.is_square()) throw Error(ErrorCode::ShapeMismatch, "jacobi check needs a square window");
  if (n_max < 1 || static_cast<std::size_t>(n_max) > j.rows()) {
    throw Error(ErrorCode::OutOfRange, "n_max must lie in 1..window size");
  }
  const auto n = static_cast<std::size_t>(n_max);
  const MatrixWindow lead = j.block(0, 0, n, n);
  TPReport report;
  report.checked_order = n_max;
  report.strategy = MinorStrategy::Jacobi;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      ++report.minors_checked;
      if (lead(r, c).sign() < 0) {
        report.verdict = TPVerdict::NotTP;
        report.witness = MinorWitness{{r}, {c}, lead(r, c)};
        return report;
      }
    }
  }
  if (!is_tridiagonal(lead)) throw Error(ErrorCode::ShapeMismatch, "production window is not tridiagonal");
  for (std::size_t size = 2; size <= n; ++size) {
    for (std::size_t start = 0; start + size <= n; ++start) {
      ++report.minors_checked;
      const std::vector<std::size_t> idx = first_combination(size, start);
      Rational value = minor(lead, idx, idx);
      if (value.sign() < 0) {
        report.verdict = TPVerdict::NotTP;
        report.witness = MinorWitness{idx, idx, std::move(value)};
        return report;
      }
    }
  }
  return report;
}

Rational det_T_recurrence(const Rational& a0, const Rational& a1, const Rational& a2, int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "det T_n needs n >= 0");
  const Rational c = a0 * a2;
  Rational prev(1);
  Rational cur = a1;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Rational next = a1 * cur - c * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational det_T_closed(const Rational& a0, const Rational& a1, const Rational& a2, int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "det T_n needs n >= 0");
  const Rational disc = a1 * a1 - 4 * a0 * a2;
  if (disc.is_zero()) return Rational(n + 1) * (a1 / 2).pow(n);
  if (disc.sign() > 0) {
    if (const auto root = disc.exact_sqrt()) {
      const Rational x1 = (a1 + *root) / 2;
      const Rational x2 = (a1 - *root) / 2;
      return (x1.pow(n + 1) - x2.pow(n + 1)) / (x1 - x2);
    }
  }
  return det_T_recurrence(a0, a1, a2, n);
}

Rational det_J(const TridiagonalProduction& p, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "det J_n needs n >= 1");
  const Rational x = p.w0 * p.z1 - p.w1 * p.z0;
  if (n == 1) return p.w0;
  if (n == 2) return x;
  if (n == 3) return p.w0 * p.z1 * p.a1 - p.w0 * p.z2 * p.a0 - p.w1 * p.z0 * p.a1;
  return x * det_T_recurrence(p.a0, p.a1, p.a2, n - 2) -
         p.w0 * p.z2 * p.a0 * det_T_recurrence(p.a0, p.a1, p.a2, n - 3);
}

TheoremVerdict thm34_check(const TridiagonalProduction& p) {
  const Rational disc = p.a1 * p.a1 - 4 * p.a0 * p.a2;
  if (!all_nonnegative(p) || disc.is_zero()) return TheoremVerdict::Inapplicable;
  const Rational x = p.w0 * p.z1 - p.w1 * p.z0;
  const Rational y = p.w0 * p.z1 * p.a1 - p.w0 * p.z2 * p.a0 - p.w1 * p.z0 * p.a1;
  return disc.sign() > 0 && x.sign() >= 0 && y.sign() >= 0 ? TheoremVerdict::TP : TheoremVerdict::NotTP;
}

ConditionVerdict one_root_check(const TridiagonalProduction& p) {
  const Rational disc = p.a1 * p.a1 - 4 * p.a0 * p.a2;
  if (!all_nonnegative(p) || !disc.is_zero()) return ConditionVerdict::Inapplicable;
  const Rational x = p.w0 * p.z1 - p.w1 * p.z0;
  const Rational y = x * p.a1 - 2 * p.w0 * p.z2 * p.a0;
  return x.sign() >= 0 && y.sign() >= 0 ? ConditionVerdict::Met : ConditionVerdict::NotMet;
}

int negative_T_horizon(const Rational& a0, const Rational& a1, const Rational& a2) {
  const double disc = (4 * a0 * a2 - a1 * a1).to_double();
  const double theta = std::atan2(std::sqrt(std::max(disc, 0.0)), a1.to_double());
  if (!(theta > 0)) return 8;
  // pi < (n+1) theta < 2 pi has a solution n below 2 pi / theta.
  return static_cast<int>(std::ceil(2 * std::numbers::pi / theta)) + 2;
}

int find_negative_T(const Rational& a0, const Rational& a1, const Rational& a2, std::optional<int> n_limit) {
  if (a0.sign() < 0 || a1.sign() < 0 || a2.sign() < 0 || (a1 * a1 - 4 * a0 * a2).sign() >= 0) {
    throw Error(ErrorCode::OutOfDomain, "negative det T_n search needs a0, a1, a2 >= 0 and a1^2 < 4 a0 a2");
  }
  const int limit = n_limit.value_or(negative_T_horizon(a0, a1, a2));
  const Rational c = a0 * a2;
  Rational prev(1);
  Rational cur = a1;
  for (int n = 1; n <= limit; ++n) {
    if (n > 1) {
      Rational next = a1 * cur - c * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (cur.sign() < 0) return n;
  }
  throw Error(ErrorCode::NotFoundWithinLimit, "no negative det T_n for n <= " + std::to_string(limit));
}

bool pf_polynomial_check(const Series& p) {
  const auto coeffs = p.coeffs();
  int degree = -1;
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    if (!coeffs[static_cast<std::size_t>(k)].is_zero()) degree = k;
  }
  if (degree > 2) throw Error(ErrorCode::DegreeTooHigh, "exact PF test covers degree <= 2 only");
  if (degree < 0) return false;
  for (int k = 0; k <= degree; ++k) {
    if (coeffs[static_cast<std::size_t>(k)].sign() < 0) return false;
  }
  if (degree < 2) return true;
  return (coeffs[1] * coeffs[1] - 4 * coeffs[0] * coeffs[2]).sign() >= 0;
}

MatrixWindow toeplitz_window(const Series& s, std::size_t n) {
  if (n > 0 && s.order() < static_cast<int>(n) - 1) {
    throw Error(ErrorCode::InsufficientOrder, "Toeplitz window needs the series to order " + std::to_string(n - 1));
  }
  MatrixWindow m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = s[static_cast<int>(i - j)];
  }
  return m;
}

TPReport pf_window_check(const Series& s, std::size_t window, int order) {
  return tp_check(toeplitz_window(s, window), order, MinorStrategy::All);
}

}  // namespace riordan

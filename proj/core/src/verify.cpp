#include "riordan/verify.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "riordan/arrays.hpp"
#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_valid(const Series& g, const Series& f) {
  if (!RiordanSpec{g, f}.is_valid()) {
    throw Error(ErrorCode::InvalidSpec, "(g, f) needs g(0) != 0, f(0) = 0, f'(0) != 0");
  }
}

int known_degree(const Series& s) {
  int degree = -1;
  for (int k = 0; k <= s.order(); ++k) {
    if (!s[k].is_zero()) degree = k;
  }
  return degree;
}

}  // namespace

MatrixWindow thm_tg_alpha_build(const Series& g, const Series& f, const Rational& alpha, std::size_t n) {
  if (alpha.sign() <= 0) throw Error(ErrorCode::InvalidSpec, "alpha must be positive");
  require_valid(g, f);
  const Series d = add(Series::constant(alpha, g.order() + 1), shift_up(g, 1));
  return build_almost_relaxed(AlmostRiordanSpec{d, g, f}, n, n);
}

MatrixWindow thm_linear_d_build(const Series& g, const Series& f, const Rational& d0, const Rational& d1,
                                std::size_t n) {
  if (d0.sign() < 0 || d1.sign() < 0) throw Error(ErrorCode::InvalidSpec, "d0 and d1 must be nonnegative");
  require_valid(g, f);
  const Series d = Series::polynomial({d0, d1}, std::max(g.order(), 1));
  return build_almost_relaxed(AlmostRiordanSpec{d, g, f}, n, n);
}

CorollaryReport corollary_check(const Series& d, const Series& g, const Series& f, std::size_t n) {
  const int order = static_cast<int>(std::min<std::size_t>(4, n));
  CorollaryReport report;
  if (known_degree(f) <= 2 && f.order() >= 2) {
    report.f_pf_exact = true;
    report.f_is_pf = pf_polynomial_check(f);
  } else {
    report.f_is_pf = pf_window_check(f, n, order).verdict == TPVerdict::WindowTP;
  }
  report.quasi_report = tp_check(build_quasi(QuasiRiordanSpec{d, shift_up(g, 1)}, n, n), order);
  report.array_report = tp_check(build_almost_relaxed(AlmostRiordanSpec{d, g, f}, n, n), order);
  return report;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::AZW1:
      return "AZW1";
    case Family::AZW2:
      return "AZW2";
    case Family::AZW3:
      return "AZW3";
    case Family::AZW4:
      return "AZW4";
  }
  return "AZW1";
}

Family parse_family(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (Family f : {Family::AZW1, Family::AZW2, Family::AZW3, Family::AZW4}) {
    if (upper == family_name(f)) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(text) + "' (expected AZW1..AZW4)");
}

TridiagonalProduction azw_family(Family family, const Rational& alpha, const Rational& beta) {
  const Rational one(1);
  switch (family) {
    case Family::AZW1:
      return {one, alpha, alpha * alpha / 4, one, one, one, one, beta};
    case Family::AZW2:
      return {one, alpha, alpha * alpha / 4, one, one, beta, one, Rational(1, 2)};
    case Family::AZW3:
      return {one, alpha, one, one, one, one, one, beta};
    case Family::AZW4:
      return {one, alpha, one, one, one, beta, one, Rational(1, 3)};
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

bool region_check(Family family, const Rational& alpha, const Rational& beta) {
  switch (family) {
    case Family::AZW1:
      return alpha.sign() >= 0 && beta.sign() >= 0 && alpha * (1 - beta) >= 2;
    case Family::AZW2:
      return beta.sign() >= 0 && beta <= alpha / 4;
    case Family::AZW3:
      if (alpha <= 2) throw Error(ErrorCode::OutOfDomain, "AZW3 needs alpha > 2");
      return beta.sign() >= 0 && beta <= 1 - Rational(1) / alpha;
    case Family::AZW4:
      if (alpha <= 2 || alpha > 3) throw Error(ErrorCode::OutOfDomain, "AZW4 needs 2 < alpha <= 3");
      return beta.sign() >= 0 && beta <= 1 - alpha / 3;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

std::vector<RegionPoint> region_grid(Family family, const RegionBounds& bounds) {
  if (bounds.alpha_steps < 0 || bounds.beta_steps < 0) throw Error(ErrorCode::OutOfRange, "grid steps must be >= 0");
  std::vector<RegionPoint> points;
  const auto at = [](const Rational& lo, const Rational& hi, int i, int steps) {
    return steps == 0 ? lo : lo + (hi - lo) * Rational(i, steps);
  };
  for (int i = 0; i <= bounds.alpha_steps; ++i) {
    const Rational alpha = at(bounds.alpha_min, bounds.alpha_max, i, bounds.alpha_steps);
    for (int j = 0; j <= bounds.beta_steps; ++j) {
      const Rational beta = at(bounds.beta_min, bounds.beta_max, j, bounds.beta_steps);
      try {
        points.push_back(RegionPoint{alpha, beta, region_check(family, alpha, beta)});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OutOfDomain) throw;
      }
    }
  }
  return points;
}

std::string region_grid_csv(const std::vector<RegionPoint>& points) {
  std::string out = "alpha,beta,label\n";
  for (const RegionPoint& p : points) {
    out += p.alpha.to_string() + ',' + p.beta.to_string() + ',' + (p.inside ? "in" : "out") + '\n';
  }
  return out;
}

bool FamilyPointCheck::contradicts() const {
  const bool window_tp = window.verdict == TPVerdict::WindowTP;
  return (claims_tp && !window_tp) || (claims_not_tp && window_tp);
}

FamilyPointCheck check_family_point(Family family, const Rational& alpha, const Rational& beta, int n) {
  const TridiagonalProduction p = azw_family(family, alpha, beta);
  FamilyPointCheck check;
  check.family = family;
  check.alpha = alpha;
  check.beta = beta;
  if ((p.a1 * p.a1 - 4 * p.a0 * p.a2).is_zero()) {
    const ConditionVerdict v = one_root_check(p);
    check.claim = condition_verdict_name(v);
    check.claims_tp = v == ConditionVerdict::Met;
  } else {
    const TheoremVerdict v = thm34_check(p);
    check.claim = theorem_verdict_name(v);
    check.claims_tp = v == TheoremVerdict::TP;
    check.claims_not_tp = v == TheoremVerdict::NotTP;
  }
  check.window = jacobi_tp_check(tridiagonal_window(p, static_cast<std::size_t>(n)), n);
  return check;
}

}  // namespace riordan

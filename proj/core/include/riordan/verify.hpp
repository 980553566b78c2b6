#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/sequences.hpp"
#include "riordan/series.hpp"
#include "riordan/tp.hpp"

namespace riordan {

/// Window of (t*g + alpha | g, f): alpha on top of column 0, the (g, f) block
/// below and to the right. Needs alpha > 0 and a valid (g, f).
MatrixWindow thm_tg_alpha_build(const Series& g, const Series& f, const Rational& alpha, std::size_t n);

/// Window of (d0 + d1 t | g, f) for d0, d1 >= 0 (d0 = 0 allowed).
MatrixWindow thm_linear_d_build(const Series& g, const Series& f, const Rational& d0, const Rational& d1,
                                std::size_t n);

struct CorollaryReport {
  bool f_is_pf = false;
  bool f_pf_exact = false;  // exact polynomial test, otherwise a Toeplitz window screen
  TPReport quasi_report;    // window of [d, t g]
  TPReport array_report;    // window of (d | g, f)

  bool premises_hold() const { return f_is_pf && quasi_report.verdict == TPVerdict::WindowTP; }
  bool conclusion_holds() const { return array_report.verdict == TPVerdict::WindowTP; }
  /// Premises true and conclusion false would contradict the implication.
  bool consistent() const { return !premises_hold() || conclusion_holds(); }
};

/// f PF and [d, tg] TP imply (d | g, f) TP: evaluates both sides on n x n windows
/// (minor order min(4, n)).
CorollaryReport corollary_check(const Series& d, const Series& g, const Series& f, std::size_t n);

enum class Family { AZW1, AZW2, AZW3, AZW4 };

std::string_view family_name(Family f);
/// Accepts "AZW1".."AZW4" in either case.
Family parse_family(std::string_view text);

/// Tridiagonal production data of the family at (alpha, beta):
///   AZW1: a = (1, alpha, alpha^2/4), z = (1, 1, 1),    w = (1, beta)
///   AZW2: a = (1, alpha, alpha^2/4), z = (1, 1, beta), w = (1, 1/2)
///   AZW3: a = (1, alpha, 1),         z = (1, 1, 1),    w = (1, beta)
///   AZW4: a = (1, alpha, 1),         z = (1, 1, beta), w = (1, 1/3)
TridiagonalProduction azw_family(Family family, const Rational& alpha, const Rational& beta);

/// Feasible regions:
///   AZW1: alpha, beta >= 0 and alpha (1 - beta) >= 2
///   AZW2: 0 <= beta <= alpha/4
///   AZW3: 0 <= beta <= 1 - 1/alpha, defined for alpha > 2
///   AZW4: 0 <= beta <= 1 - alpha/3, defined for 2 < alpha <= 3
/// Throws OutOfDomain outside the family's alpha range.
bool region_check(Family family, const Rational& alpha, const Rational& beta);

struct RegionBounds {
  Rational alpha_min, alpha_max;
  Rational beta_min, beta_max;
  int alpha_steps = 20;
  int beta_steps = 20;
};

struct RegionPoint {
  Rational alpha;
  Rational beta;
  bool inside = false;
};

/// Evenly spaced grid including both ends; points outside the family's alpha
/// domain are skipped.
std::vector<RegionPoint> region_grid(Family family, const RegionBounds& bounds);
/// "alpha,beta,label" header, then one row per point labeled in/out.
std::string region_grid_csv(const std::vector<RegionPoint>& points);

/// Closed-form claim for a family point next to the evidence of its production window.
struct FamilyPointCheck {
  Family family = Family::AZW1;
  Rational alpha;
  Rational beta;
  std::string claim;          // theorem or sufficient-condition verdict name
  bool claims_tp = false;
  bool claims_not_tp = false;
  TPReport window;            // jacobi_tp_check on the n x n production window

  /// A TP claim with a negative window minor, or a NotTP claim with none.
  bool contradicts() const;
};

/// Uses one_root_check when a1^2 = 4 a0 a2 and thm34_check otherwise.
FamilyPointCheck check_family_point(Family family, const Rational& alpha, const Rational& beta, int n);

}  // namespace riordan

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/sequences.hpp"
#include "riordan/series.hpp"

namespace riordan {

enum class TPVerdict { WindowTP, NotTP };

/// `all` enumerates every k x k minor; `contiguous_rows` only row blocks
/// i, i+1, ..., i+k-1 (a cheap screen). `jacobi` marks reports from jacobi_tp_check.
enum class MinorStrategy { All, ContiguousRows, Jacobi };

std::string_view verdict_name(TPVerdict v);
std::string_view strategy_name(MinorStrategy s);
/// Accepts "all" and "contiguous_rows".
MinorStrategy parse_strategy(std::string_view text);

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

/// WindowTP only says every enumerated minor of the finite window is >= 0,
/// which is necessary for total positivity of the infinite array and never
/// sufficient. NotTP always carries the lexicographically first negative minor.
struct TPReport {
  TPVerdict verdict = TPVerdict::WindowTP;
  int checked_order = 0;
  MinorStrategy strategy = MinorStrategy::All;
  std::uint64_t minors_checked = 0;
  std::optional<MinorWitness> witness;

  static constexpr std::string_view kWindowNote =
      "WindowTP covers only the enumerated minors of this finite window; it is a necessary "
      "condition for total positivity and does not prove it";
};

/// Exact determinant of the submatrix on strictly increasing, in-bounds,
/// equal-length index lists. Throws BadIndexSets.
Rational minor(const MatrixWindow& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Number of minors tp_check would enumerate (saturates at UINT64_MAX).
std::uint64_t count_minors(std::size_t rows, std::size_t cols, int max_order, MinorStrategy strategy);

/// Enumerates minors of order 1..max_order in (k, rows, cols) lexicographic
/// order and stops at the first negative one. Throws OutOfRange when
/// max_order exceeds min(R, C) or the count exceeds max_minors.
TPReport tp_check(const MatrixWindow& m, int max_order, MinorStrategy strategy = MinorStrategy::All,
                  std::uint64_t max_minors = std::numeric_limits<std::uint64_t>::max());

/// For a tridiagonal J: entry signs, then principal minors on consecutive rows
/// of size up to n_max, ordered by (size, start). Throws ShapeMismatch when J
/// is not tridiagonal (checked after the entry signs).
TPReport jacobi_tp_check(const MatrixWindow& j, int n_max);

/// det T_n of the tridiagonal Toeplitz matrix with a0 below, a1 on and a2
/// above the diagonal: T_n = a1 T_(n-1) - a0 a2 T_(n-2), T_0 = 1.
Rational det_T_recurrence(const Rational& a0, const Rational& a1, const Rational& a2, int n);

/// Root form: (n+1)(a1/2)^n for a double root, (x1^(n+1) - x2^(n+1))/(x1 - x2)
/// when the roots are rational; otherwise the recurrence.
Rational det_T_closed(const Rational& a0, const Rational& a1, const Rational& a2, int n);

/// Leading principal minor of order n of the tridiagonal production window.
Rational det_J(const TridiagonalProduction& p, int n);

enum class TheoremVerdict { TP, NotTP, Inapplicable };
enum class ConditionVerdict { Met, NotMet, Inapplicable };

std::string_view theorem_verdict_name(TheoremVerdict v);
std::string_view condition_verdict_name(ConditionVerdict v);

/// Nonnegative parameters with a1^2 != 4 a0 a2: TP iff a1^2 - 4 a0 a2 > 0,
/// w0 z1 - w1 z0 >= 0 and w0 z1 a1 - w0 z2 a0 - w1 z0 a1 >= 0.
TheoremVerdict thm34_check(const TridiagonalProduction& p);

/// Nonnegative parameters with a1^2 = 4 a0 a2: sufficient condition
/// w0 z1 - w1 z0 >= 0 and w0 z1 a1 - w1 z0 a1 - 2 w0 z2 a0 >= 0.
ConditionVerdict one_root_check(const TridiagonalProduction& p);

/// Horizon guaranteed to contain a negative det T_n when a1^2 < 4 a0 a2.
int negative_T_horizon(const Rational& a0, const Rational& a1, const Rational& a2);

/// Smallest n <= n_limit with det T_n < 0 (default limit from negative_T_horizon).
/// Throws OutOfDomain outside a0, a1, a2 >= 0, a1^2 < 4 a0 a2, and
/// NotFoundWithinLimit when the limit is too small.
int find_negative_T(const Rational& a0, const Rational& a1, const Rational& a2,
                    std::optional<int> n_limit = std::nullopt);

/// Polynomial of degree <= 2 with only real nonpositive roots: nonnegative
/// coefficients and nonnegative discriminant. Throws DegreeTooHigh.
bool pf_polynomial_check(const Series& p);

/// Lower-triangular Toeplitz window T(i,j) = s_(i-j).
MatrixWindow toeplitz_window(const Series& s, std::size_t n);

/// tp_check of the n x n Toeplitz window at the given order.
TPReport pf_window_check(const Series& s, std::size_t window, int order);

}  // namespace riordan

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Syntax tree of a generating-function expression over t.
///
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' ['-'] INT)?
///   atom  := INT | 't' | 'sqrt' '(' expr ')' | '(' expr ')'
///
/// Literals are nonnegative integers; fractions are written as divisions.
struct GFExpression {
  enum class Kind { Integer, T, Add, Sub, Mul, Div, Neg, Pow, Sqrt };

  Kind kind = Kind::Integer;
  Rational value;     // Integer
  long exponent = 0;  // Pow
  std::vector<GFExpression> children;

  friend bool operator==(const GFExpression&, const GFExpression&) = default;
};

/// Throws SyntaxError carrying the byte offset of the offending character.
GFExpression parse_gf(std::string_view text);

/// Minimal-parenthesis rendering; parse_gf(to_string(e)) == e.
std::string to_string(const GFExpression& e);

/// Exact expansion to `order`. A division by a series with zero constant term
/// is allowed when the numerator vanishes to the same order (the powers of t
/// cancel); otherwise UncanceledPole.
Series evaluate_gf(const GFExpression& e, int order);

/// parse_gf followed by evaluate_gf.
Series gf_series(std::string_view text, int order);

}  // namespace riordan

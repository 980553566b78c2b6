#include "riordan/gf_expr.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

namespace {

using Kind = GFExpression::Kind;

GFExpression leaf(Kind kind, Rational value = Rational(0)) {
  GFExpression e;
  e.kind = kind;
  e.value = std::move(value);
  return e;
}

GFExpression node(Kind kind, std::vector<GFExpression> children, long exponent = 0) {
  GFExpression e;
  e.kind = kind;
  e.children = std::move(children);
  e.exponent = exponent;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GFExpression parse() {
    GFExpression e = expr();
    skip_space();
    if (pos_ < text_.size()) unexpected();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw Error(ErrorCode::SyntaxError, message, pos_); }

  [[noreturn]] void unexpected() const {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c))) {
      fail(std::string("expected an operator before '") + c + "' (write products with '*')");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  GFExpression expr() {
    GFExpression lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = node(Kind::Add, {std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = node(Kind::Sub, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  GFExpression term() {
    GFExpression lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = node(Kind::Mul, {std::move(lhs), unary()});
      } else if (accept('/')) {
        lhs = node(Kind::Div, {std::move(lhs), unary()});
      } else {
        return lhs;
      }
    }
  }

  GFExpression unary() {
    if (accept('-')) return node(Kind::Neg, {unary()});
    return power();
  }

  GFExpression power() {
    GFExpression base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer exponent");
    }
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<long>::max() - 9) / 10) {
        pos_ = start;
        fail("exponent too large");
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return node(Kind::Pow, {std::move(base)}, negative ? -value : value);
  }

  GFExpression atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return leaf(Kind::Integer, Rational(mpq_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "t") return leaf(Kind::T);
      if (name == "sqrt") {
        expect('(');
        GFExpression inner = expr();
        expect(')');
        return node(Kind::Sqrt, {std::move(inner)});
      }
      skip_space();
      const bool called = pos_ < text_.size() && text_[pos_] == '(';
      pos_ = start;
      if (called) fail("composition '" + std::string(name) + "(...)' is not supported");
      fail("unknown identifier '" + std::string(name) + "'");
    }
    if (accept('(')) {
      GFExpression inner = expr();
      expect(')');
      return inner;
    }
    unexpected();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const GFExpression& e) {
  switch (e.kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const GFExpression& e, std::string& out);

void print_at_least(const GFExpression& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const GFExpression& e, std::string& out) {
  switch (e.kind) {
    case Kind::Integer:
      out += e.value.to_string();
      return;
    case Kind::T:
      out += 't';
      return;
    case Kind::Add:
    case Kind::Sub:
      print_at_least(e.children[0], 1, out);
      out += e.kind == Kind::Add ? '+' : '-';
      print_at_least(e.children[1], 2, out);
      return;
    case Kind::Mul:
    case Kind::Div:
      print_at_least(e.children[0], 2, out);
      out += e.kind == Kind::Mul ? '*' : '/';
      print_at_least(e.children[1], 3, out);
      return;
    case Kind::Neg:
      out += '-';
      print_at_least(e.children[0], 3, out);
      return;
    case Kind::Pow:
      print_at_least(e.children[0], 5, out);
      out += '^';
      out += std::to_string(e.exponent);
      return;
    case Kind::Sqrt:
      out += "sqrt(";
      print(e.children[0], out);
      out += ')';
      return;
  }
}

Series divide_cancelling(const Series& num, const Series& den) {
  if (!den[0].is_zero()) return div(num, den);
  const auto v = den.valuation();
  if (!v) throw Error(ErrorCode::DivByNonUnit, "division by a series that vanishes to its known order");
  for (int k = 0; k < *v && k <= num.order(); ++k) {
    if (!num[k].is_zero()) {
      throw Error(ErrorCode::UncanceledPole, "denominator vanishes at t = 0 to order " + std::to_string(*v) +
                                                 " but the numerator does not");
    }
  }
  if (num.order() < *v) throw Error(ErrorCode::InsufficientOrder, "not enough terms to cancel t");
  return div(drop_t(num, *v), drop_t(den, *v));
}

Series eval(const GFExpression& e, int work) {
  switch (e.kind) {
    case Kind::Integer:
      return Series::constant(e.value, work);
    case Kind::T:
      return Series::identity(work);
    case Kind::Add:
      return add(eval(e.children[0], work), eval(e.children[1], work));
    case Kind::Sub:
      return sub(eval(e.children[0], work), eval(e.children[1], work));
    case Kind::Mul:
      return mul(eval(e.children[0], work), eval(e.children[1], work));
    case Kind::Div:
      return divide_cancelling(eval(e.children[0], work), eval(e.children[1], work));
    case Kind::Neg:
      return neg(eval(e.children[0], work));
    case Kind::Pow:
      if (e.exponent < 0) {
        return divide_cancelling(Series::constant(1, work), pow(eval(e.children[0], work), -e.exponent));
      }
      return pow(eval(e.children[0], work), e.exponent);
    case Kind::Sqrt:
      return sqrt(eval(e.children[0], work));
  }
  throw Error(ErrorCode::InvalidSpec, "malformed expression");
}

}  // namespace

GFExpression parse_gf(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GFExpression& e) {
  std::string out;
  print(e, out);
  return out;
}

Series evaluate_gf(const GFExpression& e, int order) {
  if (order < 0) throw Error(ErrorCode::OutOfRange, "order must be nonnegative");
  // Cancelled powers of t cost terms; widen the working order until enough survive.
  for (int extra = 0; extra <= 64; extra = extra == 0 ? 2 : extra * 2) {
    try {
      const Series s = eval(e, order + extra);
      if (s.order() >= order) return s.truncate(order);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InsufficientOrder) throw;
    }
  }
  throw Error(ErrorCode::InsufficientOrder, "expression loses too many terms to reach order " + std::to_string(order));
}

Series gf_series(std::string_view text, int order) { return evaluate_gf(parse_gf(text), order); }

}  // namespace riordan

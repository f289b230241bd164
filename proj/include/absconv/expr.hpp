#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "absconv/pl.hpp"
#include "absconv/rational.hpp"

namespace absconv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class ExprKind {
  literal,
  variable,
  negate,
  add,
  subtract,
  scale,
  abs_value,
  maximum,
  minimum,
};

/// Immutable expression tree over exact rationals: literals, coordinates,
/// negation, +/-, rational scaling, abs, max, min.  Printing then parsing
/// round-trips to an equal tree.
class FunctionExpr {
 public:
  struct Node;  // defined in expr.cpp

  static FunctionExpr literal(const Rational& v);
  static FunctionExpr variable(int index);
  static FunctionExpr negate(const FunctionExpr& e);
  static FunctionExpr add(const FunctionExpr& a, const FunctionExpr& b);
  static FunctionExpr subtract(const FunctionExpr& a, const FunctionExpr& b);
  static FunctionExpr scale(const Rational& c, const FunctionExpr& e);
  static FunctionExpr abs_value(const FunctionExpr& e);
  static FunctionExpr maximum(const FunctionExpr& a, const FunctionExpr& b);
  static FunctionExpr minimum(const FunctionExpr& a, const FunctionExpr& b);

  ExprKind kind() const;
  const Rational& literal_value() const;  // literal or scale coefficient
  int variable_index() const;
  FunctionExpr child() const;  // negate/scale/abs
  FunctionExpr left() const;
  FunctionExpr right() const;

  Rational eval(std::span<const Rational> point) const;
  int max_variable_index() const;  // -1 when constant
  /// Lowers a univariate expression to its canonical piecewise-linear form.
  PLFunction lower_pl() const;

  std::string to_string() const;

  friend bool operator==(const FunctionExpr& a, const FunctionExpr& b);
  friend bool operator!=(const FunctionExpr& a, const FunctionExpr& b) { return !(a == b); }

 private:
  explicit FunctionExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)?
///   factor := rational | var | 'abs(' expr ')' | 'max(' expr ',' expr ')'
///           | 'min(' expr ',' expr ')' | '-' factor | '(' expr ')'
///   rational := integer ('/' positive-integer)? ;  var := 'x' | 'x' index
/// Products need a rational on at least one side.
FunctionExpr parse_expr(std::string_view text);

}  // namespace absconv

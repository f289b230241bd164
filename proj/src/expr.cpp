#include "absconv/expr.hpp"

#include <cctype>

namespace absconv {

struct FunctionExpr::Node {
  ExprKind kind;
  Rational value;  // literal value or scale coefficient
  int var_index = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {
using NodePtr = std::shared_ptr<const FunctionExpr::Node>;
}

FunctionExpr FunctionExpr::literal(const Rational& v) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::literal;
  n->value = v;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::variable(int index) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::variable;
  n->var_index = index;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::negate(const FunctionExpr& e) {
  if (e.kind() == ExprKind::literal) return literal(-e.literal_value());
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::negate;
  n->a = e.root_;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::add(const FunctionExpr& a, const FunctionExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::add;
  n->a = a.root_;
  n->b = b.root_;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::subtract(const FunctionExpr& a, const FunctionExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::subtract;
  n->a = a.root_;
  n->b = b.root_;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::scale(const Rational& c, const FunctionExpr& e) {
  if (e.kind() == ExprKind::literal) return literal(c * e.literal_value());
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::scale;
  n->value = c;
  n->a = e.root_;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::abs_value(const FunctionExpr& e) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::abs_value;
  n->a = e.root_;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::maximum(const FunctionExpr& a, const FunctionExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::maximum;
  n->a = a.root_;
  n->b = b.root_;
  return FunctionExpr(n);
}
FunctionExpr FunctionExpr::minimum(const FunctionExpr& a, const FunctionExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::minimum;
  n->a = a.root_;
  n->b = b.root_;
  return FunctionExpr(n);
}

ExprKind FunctionExpr::kind() const { return root_->kind; }
const Rational& FunctionExpr::literal_value() const { return root_->value; }
int FunctionExpr::variable_index() const { return root_->var_index; }
FunctionExpr FunctionExpr::child() const { return FunctionExpr(root_->a); }
FunctionExpr FunctionExpr::left() const { return FunctionExpr(root_->a); }
FunctionExpr FunctionExpr::right() const { return FunctionExpr(root_->b); }

namespace {

bool node_equal(const NodePtr& x, const NodePtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ExprKind::literal:
      return x->value == y->value;
    case ExprKind::variable:
      return x->var_index == y->var_index;
    case ExprKind::scale:
      return x->value == y->value && node_equal(x->a, y->a);
    case ExprKind::negate:
    case ExprKind::abs_value:
      return node_equal(x->a, y->a);
    default:
      return node_equal(x->a, y->a) && node_equal(x->b, y->b);
  }
}

Rational eval_node(const NodePtr& n, std::span<const Rational> pt) {
  switch (n->kind) {
    case ExprKind::literal:
      return n->value;
    case ExprKind::variable:
      if (n->var_index < 0 || static_cast<std::size_t>(n->var_index) >= pt.size())
        throw std::out_of_range("variable index outside the domain dimension");
      return pt[static_cast<std::size_t>(n->var_index)];
    case ExprKind::negate:
      return -eval_node(n->a, pt);
    case ExprKind::add:
      return eval_node(n->a, pt) + eval_node(n->b, pt);
    case ExprKind::subtract:
      return eval_node(n->a, pt) - eval_node(n->b, pt);
    case ExprKind::scale:
      return n->value * eval_node(n->a, pt);
    case ExprKind::abs_value:
      return eval_node(n->a, pt).abs();
    case ExprKind::maximum: {
      Rational l = eval_node(n->a, pt), r = eval_node(n->b, pt);
      return l >= r ? l : r;
    }
    case ExprKind::minimum: {
      Rational l = eval_node(n->a, pt), r = eval_node(n->b, pt);
      return l <= r ? l : r;
    }
  }
  throw std::logic_error("unreachable");
}

int max_var(const NodePtr& n) {
  switch (n->kind) {
    case ExprKind::literal:
      return -1;
    case ExprKind::variable:
      return n->var_index;
    case ExprKind::negate:
    case ExprKind::scale:
    case ExprKind::abs_value:
      return max_var(n->a);
    default: {
      int l = max_var(n->a), r = max_var(n->b);
      return l > r ? l : r;
    }
  }
}

PLFunction lower_node(const NodePtr& n) {
  switch (n->kind) {
    case ExprKind::literal:
      return PLFunction::constant(n->value);
    case ExprKind::variable:
      if (n->var_index != 0)
        throw std::invalid_argument("only univariate expressions lower to the line");
      return PLFunction::linear(Rational(1), Rational(0));
    case ExprKind::negate:
      return pl_negate(lower_node(n->a));
    case ExprKind::add:
      return pl_combine({{Rational(1), lower_node(n->a)}, {Rational(1), lower_node(n->b)}},
                        Rational(0));
    case ExprKind::subtract:
      return pl_combine({{Rational(1), lower_node(n->a)}, {Rational(-1), lower_node(n->b)}},
                        Rational(0));
    case ExprKind::scale:
      return pl_combine({{n->value, lower_node(n->a)}}, Rational(0));
    case ExprKind::abs_value: {
      PLFunction f = lower_node(n->a);
      return pl_upper_envelope({f, pl_negate(f)});
    }
    case ExprKind::maximum:
      return pl_upper_envelope({lower_node(n->a), lower_node(n->b)});
    case ExprKind::minimum:
      return pl_negate(
          pl_upper_envelope({pl_negate(lower_node(n->a)), pl_negate(lower_node(n->b))}));
  }
  throw std::logic_error("unreachable");
}

// Printing with minimal parentheses: the output reparses to the same tree.
std::string print_expr(const NodePtr& n);

std::string print_factor(const NodePtr& n) {
  switch (n->kind) {
    case ExprKind::literal:
      return n->value.to_string();
    case ExprKind::variable:
      return n->var_index == 0 ? "x" : "x" + std::to_string(n->var_index + 1);
    case ExprKind::negate:
      return "-" + print_factor(n->a);
    case ExprKind::abs_value:
      return "abs(" + print_expr(n->a) + ")";
    case ExprKind::maximum:
      return "max(" + print_expr(n->a) + ", " + print_expr(n->b) + ")";
    case ExprKind::minimum:
      return "min(" + print_expr(n->a) + ", " + print_expr(n->b) + ")";
    default:
      return "(" + print_expr(n) + ")";
  }
}

std::string print_term(const NodePtr& n) {
  if (n->kind == ExprKind::scale)
    return n->value.to_string() + "*" + print_factor(n->a);
  if (n->kind == ExprKind::add || n->kind == ExprKind::subtract)
    return "(" + print_expr(n) + ")";
  return print_factor(n);
}

std::string print_expr(const NodePtr& n) {
  if (n->kind == ExprKind::add)
    return print_expr(n->a) + " + " + print_term(n->b);
  if (n->kind == ExprKind::subtract)
    return print_expr(n->a) + " - " + print_term(n->b);
  return print_term(n);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FunctionExpr parse() {
    FunctionExpr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  FunctionExpr parse_sum() {
    FunctionExpr e = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        char op = text_[pos_++];
        FunctionExpr rhs = parse_term();
        e = op == '+' ? FunctionExpr::add(e, rhs) : FunctionExpr::subtract(e, rhs);
      } else {
        return e;
      }
    }
  }

  FunctionExpr parse_term() {
    std::size_t at = pos_;
    FunctionExpr e = parse_factor();
    if (peek_is('*')) {
      ++pos_;
      std::size_t at2 = pos_;
      FunctionExpr rhs = parse_factor();
      bool l_lit = e.kind() == ExprKind::literal;
      bool r_lit = rhs.kind() == ExprKind::literal;
      if (l_lit && r_lit)
        return FunctionExpr::literal(e.literal_value() * rhs.literal_value());
      if (l_lit) return FunctionExpr::scale(e.literal_value(), rhs);
      if (r_lit) return FunctionExpr::scale(rhs.literal_value(), e);
      throw ParseError("product needs a rational factor", l_lit ? at2 : at);
    }
    return e;
  }

  FunctionExpr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      FunctionExpr inner = parse_factor();
      if (inner.kind() == ExprKind::literal)
        return FunctionExpr::literal(-inner.literal_value());
      return FunctionExpr::negate(inner);
    }
    if (c == '(') {
      ++pos_;
      FunctionExpr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string ident;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ident += text_[pos_++];
      if (ident == "abs") {
        expect('(');
        FunctionExpr e = parse_sum();
        expect(')');
        return FunctionExpr::abs_value(e);
      }
      if (ident == "max" || ident == "min") {
        expect('(');
        FunctionExpr a = parse_sum();
        expect(',');
        FunctionExpr b = parse_sum();
        expect(')');
        return ident == "max" ? FunctionExpr::maximum(a, b) : FunctionExpr::minimum(a, b);
      }
      if (ident == "x") {
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          long idx = 0;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            idx = idx * 10 + (text_[pos_] - '0');
            if (idx > 1000) throw ParseError("variable index too large", start);
            ++pos_;
          }
          if (idx < 1) throw ParseError("variable index must be positive", start);
          return FunctionExpr::variable(static_cast<int>(idx - 1));
        }
        return FunctionExpr::variable(0);
      }
      throw ParseError("unknown identifier '" + ident + "'", start);
    }
    throw ParseError("unexpected character", pos_);
  }

  FunctionExpr parse_rational() {
    std::size_t start = pos_;
    auto read_digits = [&]() -> long long {
      long long v = 0;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected digits", pos_);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > (1LL << 62)) throw ParseError("integer literal too large", start);
        ++pos_;
      }
      return v;
    };
    long long num = read_digits();
    long long den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t slash = pos_;
      ++pos_;
      den = read_digits();
      if (den == 0) throw ParseError("division by zero in a literal", slash);
    }
    return FunctionExpr::literal(Rational(num, den));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational FunctionExpr::eval(std::span<const Rational> point) const {
  return eval_node(root_, point);
}

int FunctionExpr::max_variable_index() const { return max_var(root_); }

PLFunction FunctionExpr::lower_pl() const { return lower_node(root_); }

std::string FunctionExpr::to_string() const { return print_expr(root_); }

bool operator==(const FunctionExpr& a, const FunctionExpr& b) {
  return node_equal(a.root_, b.root_);
}

FunctionExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace absconv

#include "ssrm/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

namespace ssrm {

enum class Op { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Sqrt, Abs, Log, Exp };

struct Expression::Node {
  Op op = Op::Constant;
  double value = 0.0;
  std::size_t index = 0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

namespace {

using NodePtr = std::unique_ptr<Expression::Node>;

NodePtr leaf(double value) {
  auto n = std::make_unique<Expression::Node>();
  n->op = Op::Constant;
  n->value = value;
  return n;
}

NodePtr unary(Op op, NodePtr arg) {
  auto n = std::make_unique<Expression::Node>();
  n->op = op;
  n->lhs = std::move(arg);
  return n;
}

NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_unique<Expression::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

std::optional<Op> function_op(std::string_view name) {
  if (name == "sin") return Op::Sin;
  if (name == "cos") return Op::Cos;
  if (name == "sqrt") return Op::Sqrt;
  if (name == "abs") return Op::Abs;
  if (name == "log") return Op::Log;
  if (name == "exp") return Op::Exp;
  return std::nullopt;
}

// Recursive descent:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?
//   primary := number | name | name '(' expr ')' | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables,
         const std::map<std::string, double>& constants)
      : text_(text), variables_(variables), constants_(constants) {}

  NodePtr parse() {
    auto root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

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

  NodePtr expr() {
    auto lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = binary(Op::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Op::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    auto lhs = unary_expr();
    while (true) {
      if (accept('*')) {
        lhs = binary(Op::Mul, std::move(lhs), unary_expr());
      } else if (accept('/')) {
        lhs = binary(Op::Div, std::move(lhs), unary_expr());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary_expr() {
    if (accept('-')) return unary(Op::Neg, unary_expr());
    if (accept('+')) return unary_expr();
    return power();
  }

  NodePtr power() {
    auto base = primary();
    if (accept('^')) return binary(Op::Pow, std::move(base), unary_expr());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return leaf(value);
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string id(text_.substr(start, pos_ - start));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const auto op = function_op(id);
      if (!op) {
        pos_ = start;
        fail("unknown function '" + id + "'");
      }
      accept('(');
      auto arg = expr();
      if (!accept(')')) fail("expected ')' after argument of " + id);
      return unary(*op, std::move(arg));
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i] == id) {
        auto n = std::make_unique<Expression::Node>();
        n->op = Op::Variable;
        n->index = i;
        return n;
      }
    }
    if (const auto it = constants_.find(id); it != constants_.end()) return leaf(it->second);
    if (id == "pi") return leaf(std::numbers::pi);
    pos_ = start;
    fail("unknown identifier '" + id + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  const std::map<std::string, double>& constants_;
  std::size_t pos_ = 0;
};

double eval(const Expression::Node& n, std::span<const double> x) {
  switch (n.op) {
    case Op::Constant:
      return n.value;
    case Op::Variable:
      return x[n.index];
    case Op::Neg:
      return -eval(*n.lhs, x);
    case Op::Add:
      return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Op::Sub:
      return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Op::Mul:
      return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Op::Div: {
      const double d = eval(*n.rhs, x);
      if (d == 0.0) throw DomainError("division by zero");
      return eval(*n.lhs, x) / d;
    }
    case Op::Pow: {
      const double r = std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
      if (std::isnan(r)) throw DomainError("power of a negative base");
      return r;
    }
    case Op::Sin:
      return std::sin(eval(*n.lhs, x));
    case Op::Cos:
      return std::cos(eval(*n.lhs, x));
    case Op::Sqrt: {
      const double a = eval(*n.lhs, x);
      if (a < 0.0) throw DomainError("sqrt of a negative value");
      return std::sqrt(a);
    }
    case Op::Abs:
      return std::abs(eval(*n.lhs, x));
    case Op::Log: {
      const double a = eval(*n.lhs, x);
      if (!(a > 0.0)) throw DomainError("log of a nonpositive value");
      return std::log(a);
    }
    case Op::Exp:
      return std::exp(eval(*n.lhs, x));
  }
  return 0.0;
}

}  // namespace

Expression Expression::parse(std::string_view text, const std::vector<std::string>& variables,
                             const std::map<std::string, double>& constants) {
  Expression e;
  e.text_ = std::string(text);
  e.arity_ = variables.size();
  e.root_ = Parser(text, variables, constants).parse();
  return e;
}

double Expression::evaluate(std::span<const double> x) const {
  if (x.size() != arity_) {
    throw ShapeError("expression expects " + std::to_string(arity_) + " arguments, got " +
                     std::to_string(x.size()));
  }
  return eval(*root_, x);
}

}  // namespace ssrm

#include "eulerops/parser.hpp"

#include <cctype>
#include <string>

#include "eulerops/errors.hpp"

namespace eulerops {

namespace {

enum class Tok { number, variable, derivative, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok type;
  std::size_t offset;
  std::string text;
  SymbolVar var{};
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == src_.size()) {
        out.push_back({Tok::end, pos_, "", {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  // Parses a 1-based index following a variable prefix.
  std::uint32_t index(std::size_t start) {
    const std::size_t first = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (first == pos_) throw ParseError(start, "variable needs a numeric index");
    const unsigned long value = std::stoul(std::string(src_.substr(first, pos_ - first)));
    if (value == 0) throw ParseError(start, "variable indices start at 1");
    return static_cast<std::uint32_t>(value - 1);
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = src_[pos_];
    switch (c) {
      case '+': ++pos_; return {Tok::plus, start, "+", {}};
      case '-': ++pos_; return {Tok::minus, start, "-", {}};
      case '*': ++pos_; return {Tok::star, start, "*", {}};
      case '^': ++pos_; return {Tok::caret, start, "^", {}};
      case '(': ++pos_; return {Tok::lparen, start, "(", {}};
      case ')': ++pos_; return {Tok::rparen, start, ")", {}};
      default: break;
    }
    if (is_digit(c)) {
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (den == pos_) throw ParseError(start, "fraction needs a denominator");
      }
      return {Tok::number, start, std::string(src_.substr(start, pos_ - start)), {}};
    }
    if (starts_with("d/dxi")) {
      pos_ += 5;
      return {Tok::derivative, start, "", {SymbolVarKind::xi, index(start)}};
    }
    if (starts_with("d/dx")) {
      pos_ += 4;
      return {Tok::derivative, start, "", {SymbolVarKind::x, index(start)}};
    }
    if (starts_with("xi")) {
      pos_ += 2;
      return {Tok::variable, start, "", {SymbolVarKind::xi, index(start)}};
    }
    if (starts_with("th")) {
      pos_ += 2;
      return {Tok::variable, start, "", {SymbolVarKind::theta, index(start)}};
    }
    if (c == 'x') {
      ++pos_;
      return {Tok::variable, start, "", {SymbolVarKind::x, index(start)}};
    }
    if (c == 'p') {
      ++pos_;
      return {Tok::variable, start, "", {SymbolVarKind::p, index(start)}};
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, ExprKind kind, const BundleModel& model)
      : tokens_(std::move(tokens)), kind_(kind), model_(model) {}

  Expr run() {
    Expr e = expr();
    if (peek().type != Tok::end) throw ParseError(peek().offset, "unexpected trailing input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  Expr binary(Expr::Node node, std::size_t offset, Expr lhs, Expr rhs) {
    Expr e;
    e.node = node;
    e.offset = offset;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().type == Tok::plus || peek().type == Tok::minus) {
      const Token& op = take();
      Expr rhs = term();
      lhs = binary(op.type == Tok::plus ? Expr::Node::add : Expr::Node::subtract, op.offset,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().type == Tok::star) {
      const Token& op = take();
      Expr rhs = unary();
      lhs = binary(Expr::Node::multiply, op.offset, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr unary() {
    if (peek().type == Tok::minus) {
      const Token& op = take();
      Expr e;
      e.node = Expr::Node::negate;
      e.offset = op.offset;
      e.children.push_back(unary());
      return e;
    }
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    if (peek().type != Tok::caret) return base;
    const Token& op = take();
    const Token& exp = take();
    if (exp.type != Tok::number || exp.text.find('/') != std::string::npos)
      throw ParseError(exp.offset, "exponent must be a natural number");
    Expr e;
    e.node = Expr::Node::power;
    e.offset = op.offset;
    e.exponent = static_cast<std::uint32_t>(std::stoul(exp.text));
    e.children.push_back(std::move(base));
    return e;
  }

  void check_range(const Token& tok) const {
    const bool on_base = tok.var.kind == SymbolVarKind::x || tok.var.kind == SymbolVarKind::p;
    const std::uint32_t limit = on_base ? model_.m() : model_.n();
    if (tok.var.index >= limit)
      throw ParseError(tok.offset, "variable index " + std::to_string(tok.var.index + 1) +
                                       " out of range 1.." + std::to_string(limit));
  }

  Expr atom() {
    const Token& tok = take();
    Expr e;
    e.offset = tok.offset;
    switch (tok.type) {
      case Tok::number:
        e.node = Expr::Node::number;
        try {
          e.value = Rational::parse(tok.text);
        } catch (const std::exception& ex) {
          throw ParseError(tok.offset, ex.what());
        }
        return e;
      case Tok::variable: {
        const bool momentum = tok.var.kind == SymbolVarKind::p || tok.var.kind == SymbolVarKind::theta;
        if (momentum && kind_ != ExprKind::symbol)
          throw ParseError(tok.offset, "momentum variables are only allowed in symbol expressions");
        check_range(tok);
        e.node = Expr::Node::variable;
        e.var = tok.var;
        return e;
      }
      case Tok::derivative:
        if (kind_ != ExprKind::op)
          throw ParseError(tok.offset, "derivative symbols are only allowed in operator expressions");
        check_range(tok);
        e.node = Expr::Node::derivative;
        e.var = tok.var;
        return e;
      case Tok::lparen: {
        Expr inner = expr();
        if (peek().type != Tok::rparen) throw ParseError(peek().offset, "expected ')'");
        take();
        return inner;
      }
      case Tok::end:
        throw ParseError(tok.offset, "unexpected end of input");
      default:
        throw ParseError(tok.offset, "unexpected token");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ExprKind kind_;
  BundleModel model_;
};

// Shared evaluator: Value supplies +, -, negation, product and pow.
template <typename Value, typename Leaf, typename Mul>
Value evaluate(const Expr& e, const Leaf& leaf, const Mul& mul, const Value& one) {
  switch (e.node) {
    case Expr::Node::number:
    case Expr::Node::variable:
    case Expr::Node::derivative:
      return leaf(e);
    case Expr::Node::negate:
      return -evaluate<Value>(e.children[0], leaf, mul, one);
    case Expr::Node::add:
      return evaluate<Value>(e.children[0], leaf, mul, one) +
             evaluate<Value>(e.children[1], leaf, mul, one);
    case Expr::Node::subtract:
      return evaluate<Value>(e.children[0], leaf, mul, one) -
             evaluate<Value>(e.children[1], leaf, mul, one);
    case Expr::Node::multiply:
      return mul(evaluate<Value>(e.children[0], leaf, mul, one),
                 evaluate<Value>(e.children[1], leaf, mul, one));
    case Expr::Node::power: {
      const Value base = evaluate<Value>(e.children[0], leaf, mul, one);
      Value result = one;
      for (std::uint32_t k = 0; k < e.exponent; ++k) result = mul(result, base);
      return result;
    }
  }
  return one;
}

Variable function_var(const SymbolVar& v) {
  return v.kind == SymbolVarKind::x ? Variable::base(v.index) : Variable::fiber(v.index);
}

}  // namespace

Expr parse(std::string_view text, ExprKind kind, const BundleModel& model) {
  return Parser(Lexer(text).run(), kind, model).run();
}

FiberPoly to_function(const Expr& expr, const BundleModel& model) {
  auto leaf = [&](const Expr& e) {
    if (e.node == Expr::Node::number) return FiberPoly::constant(model, e.value);
    if (e.node == Expr::Node::variable &&
        (e.var.kind == SymbolVarKind::x || e.var.kind == SymbolVarKind::xi))
      return FiberPoly::variable(model, function_var(e.var));
    throw ParseError(e.offset, "token not allowed in a function expression");
  };
  auto mul = [](const FiberPoly& a, const FiberPoly& b) { return a * b; };
  return evaluate<FiberPoly>(expr, leaf, mul, FiberPoly::one(model));
}

DiffOp to_operator(const Expr& expr, const BundleModel& model) {
  auto leaf = [&](const Expr& e) {
    if (e.node == Expr::Node::number)
      return multiplication_operator(FiberPoly::constant(model, e.value));
    if (e.node == Expr::Node::derivative) return DiffOp::derivative(model, function_var(e.var));
    if (e.node == Expr::Node::variable &&
        (e.var.kind == SymbolVarKind::x || e.var.kind == SymbolVarKind::xi))
      return multiplication_operator(FiberPoly::variable(model, function_var(e.var)));
    throw ParseError(e.offset, "token not allowed in an operator expression");
  };
  auto mul = [](const DiffOp& a, const DiffOp& b) { return compose(a, b); };
  return evaluate<DiffOp>(expr, leaf, mul, DiffOp::identity(model));
}

SymbolPoly to_symbol(const Expr& expr, const BundleModel& model) {
  auto leaf = [&](const Expr& e) {
    if (e.node == Expr::Node::number) return SymbolPoly::constant(model, e.value);
    if (e.node == Expr::Node::variable) return SymbolPoly::variable(model, e.var);
    throw ParseError(e.offset, "token not allowed in a symbol expression");
  };
  auto mul = [](const SymbolPoly& a, const SymbolPoly& b) { return a * b; };
  return evaluate<SymbolPoly>(expr, leaf, mul, SymbolPoly::constant(model, Rational(1)));
}

FiberPoly parse_function(std::string_view text, const BundleModel& model) {
  return to_function(parse(text, ExprKind::function, model), model);
}

DiffOp parse_operator(std::string_view text, const BundleModel& model) {
  return to_operator(parse(text, ExprKind::op, model), model);
}

SymbolPoly parse_symbol(std::string_view text, const BundleModel& model) {
  return to_symbol(parse(text, ExprKind::symbol, model), model);
}

std::pair<Variable, FiberPoly> parse_assignment(std::string_view text, const BundleModel& model) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw ParseError(0, "expected '<generator> = <expression>'");
  const Expr lhs = parse(text.substr(0, eq), ExprKind::function, model);
  if (lhs.node != Expr::Node::variable)
    throw ParseError(lhs.offset, "left-hand side must be a single generator");
  Expr rhs;
  try {
    rhs = parse(text.substr(eq + 1), ExprKind::function, model);
  } catch (const ParseError& err) {
    throw ParseError(eq + 1 + err.offset(), err.reason());
  }
  return {function_var(lhs.var), to_function(rhs, model)};
}

}  // namespace eulerops

#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerops/diff_op.hpp"
#include "eulerops/fiber_poly.hpp"
#include "eulerops/symbol_poly.hpp"

namespace eulerops {

// Which value an expression denotes. Derivative symbols are only allowed in
// operators, momenta only in symbols.
enum class ExprKind { function, op, symbol };

// Syntax tree for
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' nat)?
//   atom   := rational | var | deriv | '(' expr ')'
//   var    := 'x'nat | 'xi'nat | 'p'nat | 'th'nat
//   deriv  := 'd/dx'nat | 'd/dxi'nat
//
// Juxtaposition is not multiplication. In operator expressions '*' is
// composition read left to right.
struct Expr {
  enum class Node { number, variable, derivative, negate, add, subtract, multiply, power };

  Node node = Node::number;
  Rational value;            // number
  SymbolVar var{};           // variable; derivative uses kind x or xi
  std::uint32_t exponent = 0;  // power
  std::vector<Expr> children;
  std::size_t offset = 0;  // byte offset of the node in the source text
};

// Throws ParseError (with byte offset) on lexical or syntax errors, variable
// indices outside the model, and tokens not allowed for `kind`.
Expr parse(std::string_view text, ExprKind kind, const BundleModel& model);

FiberPoly to_function(const Expr& expr, const BundleModel& model);
// Normal-ordered operator; products are compositions.
DiffOp to_operator(const Expr& expr, const BundleModel& model);
SymbolPoly to_symbol(const Expr& expr, const BundleModel& model);

FiberPoly parse_function(std::string_view text, const BundleModel& model);
DiffOp parse_operator(std::string_view text, const BundleModel& model);
SymbolPoly parse_symbol(std::string_view text, const BundleModel& model);

// "xi1 = 2*xi2 + x1": a generator and a function expression for its image.
std::pair<Variable, FiberPoly> parse_assignment(std::string_view text, const BundleModel& model);

}  // namespace eulerops

#pragma once

#include <string>
#include <vector>

#include "lpdo/binform.hpp"
#include "lpdo/diffop.hpp"
#include "lpdo/unipoly.hpp"

namespace lpdo {

/// Operator expression tree. Multiplication is noncommutative composition;
/// division requires an order-0 (scalar) denominator and means composition
/// with its inverse on the right, so A/f = A o (1/f).
enum class ExprKind {
  Number,
  Variable,    // x or y
  Derivation,  // Dx or Dy
  Negate,
  Add,
  Subtract,
  Multiply,
  Divide,
  Power,
};

struct OperatorExpr {
  ExprKind kind{};
  Rational value;                   // Number
  Var var = Var::x;                 // Variable, Derivation
  std::vector<OperatorExpr> args;   // 1 for Negate/Power, 2 for binary nodes
  int exponent = 0;                 // Power
  int line = 1, column = 1;
};

/// Recursive-descent parse with standard precedence: ^ binds over unary
/// minus over * and / over + and -. Identifiers x, y, Dx, Dy are
/// case-insensitive; whitespace is insignificant. Throws ParseError.
OperatorExpr parse_expression(const std::string& text);

/// Evaluate a tree to an operator. Division nodes whose denominator has
/// positive order raise ParseError at the node position; a zero denominator
/// raises MathError.
DiffOp evaluate(const OperatorExpr& e);

/// parse_expression + evaluate.
DiffOp parse_operator(const std::string& text);

/// Canonical textual forms; parse_operator(print_canonical(p)) == p.
/// Terms are listed in descending graded-lex order, coefficients
/// parenthesized except for a suppressed factor 1.
std::string print_canonical(const DiffOp& p);

std::string to_string(const Rational& r);
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);
/// Homogeneous form in the symbol variables v, w.
std::string to_string(const BinaryForm& f);
/// Polynomial in the indeterminate z (characteristic equations).
std::string to_string_in_z(const UniPoly<RatFunc>& p);

}  // namespace lpdo

#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ringopt/error.hpp"

namespace ringopt {

using BigInt = boost::multiprecision::cpp_int;

enum class ExprKind { Variable, Coefficient, Literal, Sum, Product, Negation, Power };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable ring-expression node. Sum/Product use lhs+rhs, Negation uses
/// lhs, Power uses lhs plus a non-negative integer exponent.
struct Expr {
  ExprKind kind;
  std::string name;       // Variable, Coefficient
  BigInt value;           // Literal
  ExprPtr lhs, rhs;
  unsigned exponent = 0;  // Power

  static ExprPtr variable(std::string n);
  static ExprPtr coefficient(std::string n);
  static ExprPtr literal(BigInt v);
  static ExprPtr sum(ExprPtr l, ExprPtr r);
  static ExprPtr product(ExprPtr l, ExprPtr r);
  static ExprPtr negation(ExprPtr c);
  static ExprPtr power(ExprPtr base, unsigned e);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool is_literal(const ExprPtr& e, const BigInt& v);
bool contains_variable(const ExprPtr& e);

/// Renders with minimal parentheses; `a + -b` becomes `a - b`.
std::string to_string(const ExprPtr& e);

/// Declared algebraic structure from a `ring_prop` pragma.
struct RingSpec {
  std::string add_op;
  std::string add_identity;
  std::string add_inverse;
  std::string mul_op;
  std::string mul_identity;
  std::string carrier;
};

/// Bit width of the ring carrier type (int -> 32, long -> 64, ...).
unsigned carrier_width(const std::string& carrier);

/// Canonical dense univariate form: coeffs[i] is the (variable-free)
/// coefficient of variable^i. The top coefficient is never the literal 0
/// except for the zero polynomial itself.
struct Polynomial {
  std::string variable;
  std::vector<ExprPtr> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Polynomial normalize(const ExprPtr& expr, const RingSpec& ring, const std::string& variable);
int degree(const Polynomial& p);

/// Re-expands the canonical form as an Expression (ascending exponents).
ExprPtr to_expression(const Polynomial& p);

/// Sorted unique coefficient-atom names appearing in the coefficients.
std::vector<std::string> coefficient_atoms(const Polynomial& p);

}  // namespace ringopt

#pragma once

#include <random>
#include <string>

#include "ringopt/annotations.hpp"
#include "ringopt/expr.hpp"

namespace ringopt::test {

inline RingSpec int_ring() { return {"+", "0", "-", "*", "1", "int"}; }

/// A0 + A1*x + ... + An*x^n with symbolic coefficients.
inline Polynomial atom_poly(int n, const std::string& var = "x") {
  Polynomial p;
  p.variable = var;
  for (int i = 0; i <= n; ++i)
    p.coeffs.push_back(Expr::coefficient("A" + std::to_string(i)));
  return p;
}

/// Random ring expression over x, A0..A2 and small literals. Kept shallow
/// so distributive expansion stays small.
inline ExprPtr random_expr(std::mt19937_64& rng, int depth = 3) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth == 0) {
    switch (pick(3)) {
      case 0: return Expr::variable("x");
      case 1: return Expr::coefficient("A" + std::to_string(pick(3)));
      default: return Expr::literal(pick(7) - 3);
    }
  }
  switch (pick(5)) {
    case 0: return Expr::sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 1: return Expr::product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: return Expr::negation(random_expr(rng, depth - 1));
    case 3: return Expr::power(random_expr(rng, depth - 1), pick(4));
    default: return random_expr(rng, 0);
  }
}

}  // namespace ringopt::test

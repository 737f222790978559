#include "ringopt/expr.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ringopt {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPolynomial: return "NonPolynomial";
    case Errc::VariableInExponent: return "VariableInExponent";
    case Errc::EmptyExpression: return "EmptyExpression";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::MalformedRingProp: return "MalformedRingProp";
    case Errc::UnsupportedCarrier: return "UnsupportedCarrier";
    case Errc::OrphanPragma: return "OrphanPragma";
    case Errc::DuplicatePragma: return "DuplicatePragma";
    case Errc::UnbalancedBraces: return "UnbalancedBraces";
    case Errc::AmbiguousVariable: return "AmbiguousVariable";
    case Errc::InvalidDag: return "InvalidDag";
    case Errc::UnboundName: return "UnboundName";
    case Errc::DomainTooLarge: return "DomainTooLarge";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::EmptySchemeList: return "EmptySchemeList";
    case Errc::NoAnnotatedFunctions: return "NoAnnotatedFunctions";
  }
  return "Unknown";
}

ExprPtr Expr::variable(std::string n) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Variable;
  e->name = std::move(n);
  return e;
}

ExprPtr Expr::coefficient(std::string n) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Coefficient;
  e->name = std::move(n);
  return e;
}

ExprPtr Expr::literal(BigInt v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Literal;
  e->value = std::move(v);
  return e;
}

ExprPtr Expr::sum(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Sum;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::product(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Product;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::negation(ExprPtr c) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Negation;
  e->lhs = std::move(c);
  return e;
}

ExprPtr Expr::power(ExprPtr base, unsigned exp) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Power;
  e->lhs = std::move(base);
  e->exponent = exp;
  return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Variable:
    case ExprKind::Coefficient:
      return a->name == b->name;
    case ExprKind::Literal:
      return a->value == b->value;
    case ExprKind::Sum:
    case ExprKind::Product:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    case ExprKind::Negation:
      return expr_equal(a->lhs, b->lhs);
    case ExprKind::Power:
      return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
  }
  return false;
}

bool is_literal(const ExprPtr& e, const BigInt& v) {
  return e && e->kind == ExprKind::Literal && e->value == v;
}

bool contains_variable(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::Variable) return true;
  return contains_variable(e->lhs) || contains_variable(e->rhs);
}

namespace {

// Rendering precedence: Sum < Negation < Product < Power < atom.
int prec_of(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Sum: return 1;
    case ExprKind::Negation: return 2;
    case ExprKind::Product: return 3;
    case ExprKind::Power: return 4;
    default: return 5;
  }
}

void render(const ExprPtr& e, int ctx, std::string& out) {
  int p = prec_of(*e);
  bool parens = p < ctx;
  if (parens) out += '(';
  switch (e->kind) {
    case ExprKind::Variable:
    case ExprKind::Coefficient:
      out += e->name;
      break;
    case ExprKind::Literal:
      out += e->value.str();
      break;
    case ExprKind::Sum:
      render(e->lhs, 1, out);
      if (e->rhs->kind == ExprKind::Negation) {
        out += " - ";
        render(e->rhs->lhs, 2, out);
      } else {
        out += " + ";
        render(e->rhs, 2, out);  // right operand of left-assoc sum
      }
      break;
    case ExprKind::Product:
      render(e->lhs, 3, out);
      out += '*';
      render(e->rhs, 4, out);
      break;
    case ExprKind::Negation:
      out += '-';
      render(e->lhs, 3, out);
      break;
    case ExprKind::Power:
      render(e->lhs, 5, out);
      out += '^';
      out += std::to_string(e->exponent);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::string out;
  render(e, 0, out);
  return out;
}

unsigned carrier_width(const std::string& carrier) {
  static const std::map<std::string, unsigned> widths = {
      {"char", 8},      {"signed char", 8},    {"unsigned char", 8},
      {"short", 16},    {"unsigned short", 16},
      {"int", 32},      {"unsigned", 32},      {"unsigned int", 32},
      {"long", 64},     {"unsigned long", 64},
      {"long long", 64},{"unsigned long long", 64},
      {"int8_t", 8},    {"uint8_t", 8},
      {"int16_t", 16},  {"uint16_t", 16},
      {"int32_t", 32},  {"uint32_t", 32},
      {"int64_t", 64},  {"uint64_t", 64},
  };
  auto it = widths.find(carrier);
  if (it == widths.end())
    throw Error(Errc::UnsupportedCarrier, "unsupported carrier type: " + carrier);
  return it->second;
}

namespace {

// Coefficient algebra with literal folding. Operands are variable-free.
ExprPtr coeff_add(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind == ExprKind::Literal && b->kind == ExprKind::Literal)
    return Expr::literal(a->value + b->value);
  if (is_literal(a, 0)) return b;
  if (is_literal(b, 0)) return a;
  return Expr::sum(a, b);
}

ExprPtr coeff_mul(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind == ExprKind::Literal && b->kind == ExprKind::Literal)
    return Expr::literal(a->value * b->value);
  if (is_literal(a, 0) || is_literal(b, 0)) return Expr::literal(0);
  if (is_literal(a, 1)) return b;
  if (is_literal(b, 1)) return a;
  return Expr::product(a, b);
}

ExprPtr coeff_neg(const ExprPtr& a) {
  if (a->kind == ExprKind::Literal) return Expr::literal(-a->value);
  if (a->kind == ExprKind::Negation) return a->lhs;
  return Expr::negation(a);
}

// Dense coefficient vector of the subexpression, lowest exponent first.
using Coeffs = std::vector<ExprPtr>;

Coeffs expand(const ExprPtr& e, const std::string& variable) {
  switch (e->kind) {
    case ExprKind::Variable:
      if (e->name == variable) return {Expr::literal(0), Expr::literal(1)};
      // A stray non-designated variable is treated as a coefficient atom.
      return {Expr::coefficient(e->name)};
    case ExprKind::Coefficient:
    case ExprKind::Literal:
      return {e};
    case ExprKind::Sum: {
      Coeffs l = expand(e->lhs, variable);
      Coeffs r = expand(e->rhs, variable);
      if (r.size() > l.size()) l.resize(r.size(), Expr::literal(0));
      for (std::size_t i = 0; i < r.size(); ++i) l[i] = coeff_add(l[i], r[i]);
      return l;
    }
    case ExprKind::Product: {
      Coeffs l = expand(e->lhs, variable);
      Coeffs r = expand(e->rhs, variable);
      Coeffs out(l.size() + r.size() - 1, Expr::literal(0));
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
          out[i + j] = coeff_add(out[i + j], coeff_mul(l[i], r[j]));
      return out;
    }
    case ExprKind::Negation: {
      Coeffs c = expand(e->lhs, variable);
      for (auto& t : c) t = coeff_neg(t);
      return c;
    }
    case ExprKind::Power: {
      if (contains_variable(e->lhs) && e->exponent > 4096)
        throw Error(Errc::NonPolynomial, "exponent too large to expand");
      Coeffs base = expand(e->lhs, variable);
      Coeffs acc = {Expr::literal(1)};
      for (unsigned i = 0; i < e->exponent; ++i) {
        Coeffs out(acc.size() + base.size() - 1, Expr::literal(0));
        for (std::size_t a = 0; a < acc.size(); ++a)
          for (std::size_t b = 0; b < base.size(); ++b)
            out[a + b] = coeff_add(out[a + b], coeff_mul(acc[a], base[b]));
        acc = std::move(out);
      }
      return acc;
    }
  }
  throw Error(Errc::NonPolynomial, "unexpected expression node");
}

}  // namespace

Polynomial normalize(const ExprPtr& expr, const RingSpec& ring, const std::string& variable) {
  (void)ring;  // the AST already carries only ring-legal operators
  if (!expr) throw Error(Errc::EmptyExpression, "empty expression");
  Coeffs c = expand(expr, variable);
  while (c.size() > 1 && is_literal(c.back(), 0)) c.pop_back();
  return Polynomial{variable, std::move(c)};
}

int degree(const Polynomial& p) { return p.degree(); }

ExprPtr to_expression(const Polynomial& p) {
  ExprPtr acc;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    ExprPtr term;
    if (i == 0) {
      term = p.coeffs[0];
    } else {
      ExprPtr xp = i == 1 ? Expr::variable(p.variable)
                          : Expr::power(Expr::variable(p.variable), static_cast<unsigned>(i));
      term = is_literal(p.coeffs[i], 1) ? xp : Expr::product(p.coeffs[i], xp);
    }
    acc = acc ? Expr::sum(acc, term) : term;
  }
  return acc;
}

namespace {
void collect_atoms(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Coefficient) out.insert(e->name);
  collect_atoms(e->lhs, out);
  collect_atoms(e->rhs, out);
}
}  // namespace

std::vector<std::string> coefficient_atoms(const Polynomial& p) {
  std::set<std::string> names;
  for (const auto& c : p.coeffs) collect_atoms(c, names);
  return {names.begin(), names.end()};
}

}  // namespace ringopt

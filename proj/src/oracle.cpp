#include "ringopt/oracle.hpp"

#include <random>
#include <set>

namespace ringopt {

namespace {

std::uint64_t reduce_literal(const BigInt& v, std::uint64_t mask) {
  BigInt m = BigInt(mask) + 1;
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

void collect_atoms(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Coefficient) out.insert(e->name);
  collect_atoms(e->lhs, out);
  collect_atoms(e->rhs, out);
}

std::vector<std::string> free_atoms(const EvalDag& dag, const Polynomial& poly) {
  std::set<std::string> names;
  for (const auto& c : poly.coeffs) collect_atoms(c, names);
  for (const auto& n : dag.nodes)
    if (n.kind == DagNode::Kind::Constant) collect_atoms(n.constant, names);
  return {names.begin(), names.end()};
}

}  // namespace

std::uint64_t eval_expr(const ExprPtr& e, const Binding& b) {
  const std::uint64_t mask = b.mask();
  switch (e->kind) {
    case ExprKind::Variable:
      return b.variable_value & mask;
    case ExprKind::Coefficient: {
      auto it = b.coefficient_values.find(e->name);
      if (it == b.coefficient_values.end())
        throw Error(Errc::UnboundName, "unbound name: " + e->name);
      return it->second & mask;
    }
    case ExprKind::Literal:
      return reduce_literal(e->value, mask);
    case ExprKind::Sum:
      return (eval_expr(e->lhs, b) + eval_expr(e->rhs, b)) & mask;
    case ExprKind::Product:
      return (eval_expr(e->lhs, b) * eval_expr(e->rhs, b)) & mask;
    case ExprKind::Negation:
      return (0 - eval_expr(e->lhs, b)) & mask;
    case ExprKind::Power: {
      std::uint64_t base = eval_expr(e->lhs, b), r = 1;
      for (unsigned i = 0; i < e->exponent; ++i) r = (r * base) & mask;
      return r;
    }
  }
  throw Error(Errc::UnboundName, "unexpected expression node");
}

std::uint64_t eval_dag(const EvalDag& dag, const Binding& b) {
  const std::uint64_t mask = b.mask();
  std::vector<std::uint64_t> val(dag.nodes.size());
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const DagNode& n = dag.nodes[i];
    switch (n.kind) {
      case DagNode::Kind::Input: val[i] = b.variable_value & mask; break;
      case DagNode::Kind::Constant: val[i] = eval_expr(n.constant, b); break;
      case DagNode::Kind::Add: val[i] = (val[n.lhs] + val[n.rhs]) & mask; break;
      case DagNode::Kind::Mul: val[i] = (val[n.lhs] * val[n.rhs]) & mask; break;
    }
  }
  return val[dag.root];
}

std::uint64_t eval_poly_reference(const Polynomial& poly, const Binding& b) {
  const std::uint64_t mask = b.mask();
  std::uint64_t res = 0, xp = 1;
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    res = (res + eval_expr(poly.coeffs[i], b) * xp) & mask;
    xp = (xp * (b.variable_value & mask)) & mask;
  }
  return res;
}

VerificationReport verify_equivalence(const EvalDag& dag, const Polynomial& poly,
                                      unsigned width, const VerifyMode& mode) {
  validate(dag);
  VerificationReport rep;
  rep.width = width;
  rep.seed = mode.seed;
  rep.scheme = dag.scheme_name;
  rep.mode = mode.kind == VerifyMode::Kind::Exhaustive ? "exhaustive" : "sampled";

  const std::vector<std::string> atoms = free_atoms(dag, poly);
  std::mt19937_64 rng(mode.seed);
  const std::uint64_t mask =
      width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;

  auto check = [&](const Binding& b) {
    if (eval_dag(dag, b) == eval_poly_reference(poly, b)) {
      ++rep.points_checked;
      return true;
    }
    rep.counterexample = b;
    return false;
  };

  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    if (width > 24)
      throw Error(Errc::DomainTooLarge,
                  "exhaustive verification limited to widths <= 24 bits");
    int draws = atoms.empty() ? 1 : mode.coeff_draws;
    std::uint64_t points = (std::uint64_t{1} << width) * draws;
    if (points > (std::uint64_t{1} << 24))
      throw Error(Errc::DomainTooLarge, "domain exceeds 2^24 points");
    for (int d = 0; d < draws; ++d) {
      Binding b;
      b.width = width;
      for (const auto& a : atoms) b.coefficient_values[a] = rng() & mask;
      for (std::uint64_t x = 0; x <= mask; ++x) {
        b.variable_value = x;
        if (!check(b)) {
          rep.passed = false;
          return rep;
        }
      }
    }
  } else {
    for (int s = 0; s < mode.samples; ++s) {
      Binding b;
      b.width = width;
      b.variable_value = rng() & mask;
      for (const auto& a : atoms) b.coefficient_values[a] = rng() & mask;
      if (!check(b)) {
        rep.passed = false;
        return rep;
      }
    }
  }
  rep.passed = true;
  return rep;
}

}  // namespace ringopt

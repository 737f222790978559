#include "ringopt/analysis.hpp"

#include <algorithm>

namespace ringopt {

std::pair<int, int> count_ops(const EvalDag& dag) {
  validate(dag);
  std::vector<bool> dep = variable_dependent(dag);
  int adds = 0, muls = 0;
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    if (!dep[i]) continue;
    if (dag.nodes[i].kind == DagNode::Kind::Add) ++adds;
    else if (dag.nodes[i].kind == DagNode::Kind::Mul) ++muls;
  }
  return {adds, muls};
}

int critical_path(const EvalDag& dag) {
  validate(dag);
  std::vector<bool> dep = variable_dependent(dag);
  // dist[i]: longest chain of dependent Add/Mul nodes ending at i, for
  // nodes on some Input-to-root path.
  std::vector<int> dist(dag.nodes.size(), -1);
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const DagNode& nd = dag.nodes[i];
    if (nd.kind == DagNode::Kind::Input) {
      dist[i] = 0;
    } else if (dep[i]) {
      int best = std::max(dist[nd.lhs], dist[nd.rhs]);
      dist[i] = best + 1;
    }
  }
  int d = dist[dag.root];
  return d < 0 ? 0 : d;
}

CostReport cost_report(const EvalDag& dag, int degree) {
  auto [adds, muls] = count_ops(dag);
  return CostReport{dag.scheme_name, degree, adds, muls, critical_path(dag)};
}

EvalDag llvm_fixture_deg4(const Polynomial& poly) {
  if (poly.degree() != 4)
    throw Error(Errc::InvalidDag, "llvm fixture requires a degree-4 polynomial");
  EvalDag dag;
  dag.scheme_name = "llvm-deg4";
  int x = dag.add_input(poly.variable);
  // Right branch: A4*x^4 + A0 with x^4 by squaring.
  int x2 = dag.add_op(DagNode::Kind::Mul, x, x);
  int x4 = dag.add_op(DagNode::Kind::Mul, x2, x2);
  int t4 = dag.add_op(DagNode::Kind::Mul, dag.add_constant(poly.coeffs[4]), x4);
  int right = dag.add_op(DagNode::Kind::Add, t4, dag.add_constant(poly.coeffs[0]));
  // Left branch: ((A3*x + A2)*x + A1)*x.
  int l = dag.add_op(DagNode::Kind::Mul, dag.add_constant(poly.coeffs[3]), x);
  l = dag.add_op(DagNode::Kind::Add, l, dag.add_constant(poly.coeffs[2]));
  l = dag.add_op(DagNode::Kind::Mul, l, x);
  l = dag.add_op(DagNode::Kind::Add, l, dag.add_constant(poly.coeffs[1]));
  l = dag.add_op(DagNode::Kind::Mul, l, x);
  dag.root = dag.add_op(DagNode::Kind::Add, l, right);
  return dag;
}

EvalDag llvm_fixture_deg4() {
  Polynomial p;
  p.variable = "x";
  for (int i = 0; i <= 4; ++i)
    p.coeffs.push_back(Expr::coefficient("A" + std::to_string(i)));
  return llvm_fixture_deg4(p);
}

std::vector<CostReport> compare_schemes(const Polynomial& poly, bool sparse) {
  std::vector<CostReport> out;
  for (const auto& [name, fn] : scheme_table())
    out.push_back(cost_report(fn(poly, sparse), poly.degree()));
  if (poly.degree() == 4)
    out.push_back(cost_report(llvm_fixture_deg4(poly), 4));
  std::sort(out.begin(), out.end(), [](const CostReport& a, const CostReport& b) {
    if (a.total_ops() != b.total_ops()) return a.total_ops() < b.total_ops();
    return a.scheme < b.scheme;
  });
  return out;
}

}  // namespace ringopt

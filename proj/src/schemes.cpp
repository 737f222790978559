#include "ringopt/schemes.hpp"

namespace ringopt {

int EvalDag::add_input(std::string name) {
  DagNode n;
  n.kind = DagNode::Kind::Input;
  n.input_name = std::move(name);
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

int EvalDag::add_constant(ExprPtr c) {
  DagNode n;
  n.kind = DagNode::Kind::Constant;
  n.constant = std::move(c);
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

int EvalDag::add_op(DagNode::Kind k, int lhs, int rhs) {
  DagNode n;
  n.kind = k;
  n.lhs = lhs;
  n.rhs = rhs;
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

void validate(const EvalDag& dag) {
  const int n = static_cast<int>(dag.nodes.size());
  if (n == 0 || dag.root < 0 || dag.root >= n)
    throw Error(Errc::InvalidDag, "missing or out-of-range root");
  for (int i = 0; i < n; ++i) {
    const DagNode& nd = dag.nodes[i];
    bool arith = nd.kind == DagNode::Kind::Add || nd.kind == DagNode::Kind::Mul;
    if (arith) {
      if (nd.lhs < 0 || nd.rhs < 0 || nd.lhs >= i || nd.rhs >= i)
        throw Error(Errc::InvalidDag,
                    "operand of node " + std::to_string(i) +
                        " does not precede it");
    } else if (nd.lhs != -1 || nd.rhs != -1) {
      throw Error(Errc::InvalidDag, "leaf node with operands");
    }
  }
  // Reachability: no dead nodes.
  std::vector<bool> live(n, false);
  live[dag.root] = true;
  for (int i = n - 1; i >= 0; --i) {
    if (!live[i]) continue;
    const DagNode& nd = dag.nodes[i];
    if (nd.lhs >= 0) live[nd.lhs] = true;
    if (nd.rhs >= 0) live[nd.rhs] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!live[i])
      throw Error(Errc::InvalidDag, "dead node " + std::to_string(i));
}

std::vector<bool> variable_dependent(const EvalDag& dag) {
  std::vector<bool> dep(dag.nodes.size(), false);
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const DagNode& nd = dag.nodes[i];
    if (nd.kind == DagNode::Kind::Input)
      dep[i] = true;
    else if (nd.kind == DagNode::Kind::Add || nd.kind == DagNode::Kind::Mul)
      dep[i] = dep[nd.lhs] || dep[nd.rhs];
  }
  return dep;
}

namespace {

bool skip_term(const Polynomial& poly, int i, bool sparse) {
  return sparse && is_literal(poly.coeffs[i], 0);
}

}  // namespace

// Each term A_i*x^i gets its own multiplication chain; terms are summed in
// descending exponent order (the Listing-1 shape).
EvalDag scheme_naive(const Polynomial& poly, bool sparse) {
  EvalDag dag;
  dag.scheme_name = "naive";
  const int n = poly.degree();
  if (n == 0) {
    dag.root = dag.add_constant(poly.coeffs[0]);
    return dag;
  }
  int x = dag.add_input(poly.variable);
  int acc = -1;
  for (int i = n; i >= 0; --i) {
    if (skip_term(poly, i, sparse) && i != n) continue;
    int term;
    if (i == 0) {
      term = dag.add_constant(poly.coeffs[0]);
    } else {
      int p = x;
      for (int k = 1; k < i; ++k) p = dag.add_op(DagNode::Kind::Mul, p, x);
      term = dag.add_op(DagNode::Kind::Mul, dag.add_constant(poly.coeffs[i]), p);
    }
    acc = acc < 0 ? term : dag.add_op(DagNode::Kind::Add, acc, term);
  }
  dag.root = acc;
  return dag;
}

// One shared power chain x_i = x * x_{i-1}; accumulation in ascending
// exponent order (the Listing-2 shape).
EvalDag scheme_incremental(const Polynomial& poly, bool sparse) {
  EvalDag dag;
  dag.scheme_name = "incremental";
  const int n = poly.degree();
  if (n == 0) {
    dag.root = dag.add_constant(poly.coeffs[0]);
    return dag;
  }
  int x = dag.add_input(poly.variable);
  int acc = -1;
  if (!skip_term(poly, 0, sparse)) acc = dag.add_constant(poly.coeffs[0]);
  if (!skip_term(poly, 1, sparse)) {
    int m = dag.add_op(DagNode::Kind::Mul, dag.add_constant(poly.coeffs[1]), x);
    acc = acc < 0 ? m : dag.add_op(DagNode::Kind::Add, acc, m);
  }
  int p = x;
  for (int i = 2; i <= n; ++i) {
    p = dag.add_op(DagNode::Kind::Mul, p, x);
    if (skip_term(poly, i, sparse)) continue;
    int m = dag.add_op(DagNode::Kind::Mul, dag.add_constant(poly.coeffs[i]), p);
    acc = acc < 0 ? m : dag.add_op(DagNode::Kind::Add, acc, m);
  }
  dag.root = acc;
  return dag;
}

// (((A_n x + A_{n-1})x + ...)x + A_0 — a single alternating mul/add chain.
EvalDag scheme_horner(const Polynomial& poly, bool) {
  EvalDag dag;
  dag.scheme_name = "horner";
  const int n = poly.degree();
  if (n == 0) {
    dag.root = dag.add_constant(poly.coeffs[0]);
    return dag;
  }
  int x = dag.add_input(poly.variable);
  int acc = dag.add_constant(poly.coeffs[n]);
  for (int i = n - 1; i >= 0; --i) {
    acc = dag.add_op(DagNode::Kind::Mul, acc, x);
    acc = dag.add_op(DagNode::Kind::Add, acc, dag.add_constant(poly.coeffs[i]));
  }
  dag.root = acc;
  return dag;
}

// Estrin-style plan: coefficients are paired as A_{2i+1}*y + A_{2i} and the
// pair list is folded again with y squared each round, so the critical path
// grows logarithmically in the degree.
EvalDag scheme_balanced(const Polynomial& poly, bool) {
  EvalDag dag;
  dag.scheme_name = "balanced";
  const int n = poly.degree();
  if (n == 0) {
    dag.root = dag.add_constant(poly.coeffs[0]);
    return dag;
  }
  int y = dag.add_input(poly.variable);
  std::vector<int> cur;
  cur.reserve(n + 1);
  for (int i = 0; i <= n; ++i) cur.push_back(dag.add_constant(poly.coeffs[i]));
  while (cur.size() > 1) {
    std::vector<int> next;
    for (std::size_t j = 0; j < cur.size(); j += 2) {
      if (j + 1 < cur.size()) {
        int m = dag.add_op(DagNode::Kind::Mul, cur[j + 1], y);
        next.push_back(dag.add_op(DagNode::Kind::Add, m, cur[j]));
      } else {
        next.push_back(cur[j]);
      }
    }
    cur = std::move(next);
    if (cur.size() > 1) y = dag.add_op(DagNode::Kind::Mul, y, y);
  }
  dag.root = cur[0];
  return dag;
}

EvalDag mutate_op(const EvalDag& dag, int k) {
  std::vector<int> arith;
  for (std::size_t i = 0; i < dag.nodes.size(); ++i)
    if (dag.nodes[i].kind == DagNode::Kind::Add ||
        dag.nodes[i].kind == DagNode::Kind::Mul)
      arith.push_back(static_cast<int>(i));
  if (arith.empty())
    throw Error(Errc::InvalidDag, "no arithmetic node to mutate");
  EvalDag out = dag;
  DagNode& n = out.nodes[arith[k % static_cast<int>(arith.size())]];
  n.kind = n.kind == DagNode::Kind::Add ? DagNode::Kind::Mul : DagNode::Kind::Add;
  out.scheme_name = dag.scheme_name + "+mutated";
  return out;
}

const std::vector<std::pair<std::string, SchemeFn>>& scheme_table() {
  static const std::vector<std::pair<std::string, SchemeFn>> table = {
      {"naive", scheme_naive},
      {"incremental", scheme_incremental},
      {"horner", scheme_horner},
      {"balanced", scheme_balanced},
  };
  return table;
}

}  // namespace ringopt

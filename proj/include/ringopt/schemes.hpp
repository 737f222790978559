#pragma once

#include <string>
#include <vector>

#include "ringopt/expr.hpp"

namespace ringopt {

/// Arithmetic plan for one polynomial evaluation. Nodes are stored in
/// topological order: every operand index is smaller than its user's.
struct DagNode {
  enum class Kind { Input, Constant, Add, Mul };
  Kind kind;
  std::string input_name;  // Input
  ExprPtr constant;        // Constant
  int lhs = -1;
  int rhs = -1;
};

struct EvalDag {
  std::vector<DagNode> nodes;
  int root = -1;
  std::string scheme_name;

  int add_input(std::string name);
  int add_constant(ExprPtr c);
  int add_op(DagNode::Kind k, int lhs, int rhs);
};

/// Throws InvalidDag unless acyclic (topological node order), single-rooted
/// and fully reachable from the root.
void validate(const EvalDag& dag);

/// Per-node flag: does the node's value depend on an Input?
std::vector<bool> variable_dependent(const EvalDag& dag);

// Dense mode keeps every term so the count formulas hold exactly; sparse
// mode drops the Mul/Add of zero-literal coefficients in naive and
// incremental plans (Horner and balanced keep their full chains).
EvalDag scheme_naive(const Polynomial& poly, bool sparse = false);
EvalDag scheme_incremental(const Polynomial& poly, bool sparse = false);
EvalDag scheme_horner(const Polynomial& poly, bool sparse = false);
EvalDag scheme_balanced(const Polynomial& poly, bool sparse = false);

using SchemeFn = EvalDag (*)(const Polynomial&, bool);

/// Flips the kind of the k-th (mod count) Add/Mul node. Used by the
/// mutation self-test path of `verify` to prove the checker catches
/// single-operator corruption.
EvalDag mutate_op(const EvalDag& dag, int k);

/// Deterministic order: generation cost hierarchy is asserted elsewhere,
/// this is simply the lookup table for CLI scheme selection.
const std::vector<std::pair<std::string, SchemeFn>>& scheme_table();

}  // namespace ringopt

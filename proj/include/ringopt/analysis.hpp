#pragma once

#include <string>
#include <vector>

#include "ringopt/schemes.hpp"

namespace ringopt {

struct CostReport {
  std::string scheme;
  int degree = 0;
  int adds = 0;
  int muls = 0;
  int critical_path = 0;

  int total_ops() const { return adds + muls; }
};

/// Counts Add/Mul nodes reachable from the root whose value depends on an
/// Input; constant-only subtrees contribute nothing.
std::pair<int, int> count_ops(const EvalDag& dag);

/// Longest Input-to-root path, measured in variable-dependent Add/Mul nodes.
int critical_path(const EvalDag& dag);

CostReport cost_report(const EvalDag& dag, int degree);

/// The compiler-output plan for the degree-4 polynomial: one branch computes
/// A4*x^4 + A0 via repeated squaring, the other ((A3*x + A2)*x + A1)*x, and
/// a final add merges them. 4 adds, 6 muls, path 6.
EvalDag llvm_fixture_deg4();
EvalDag llvm_fixture_deg4(const Polynomial& poly);

/// One report per scheme (plus the degree-4 fixture when it applies),
/// sorted by total op count, ties broken by scheme name.
std::vector<CostReport> compare_schemes(const Polynomial& poly, bool sparse = false);

}  // namespace ringopt

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ringopt/schemes.hpp"

namespace ringopt {

/// Point in the wrapping ring Z/2^w: a value for the variable and one per
/// coefficient atom, all reduced mod 2^w.
struct Binding {
  std::uint64_t variable_value = 0;
  std::map<std::string, std::uint64_t> coefficient_values;
  unsigned width = 32;  // 8, 16, 32 or 64

  std::uint64_t mask() const {
    return width >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << width) - 1;
  }
};

std::uint64_t eval_expr(const ExprPtr& e, const Binding& b);
std::uint64_t eval_dag(const EvalDag& dag, const Binding& b);

/// Direct sum of A_i * x^i with wrapping arithmetic; this is the reference
/// every generated plan is checked against.
std::uint64_t eval_poly_reference(const Polynomial& poly, const Binding& b);

struct VerifyMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  // Exhaustive: all 2^w variable values for each of coeff_draws random
  // coefficient assignments. Sampled: `samples` fully random points.
  int coeff_draws = 32;
  int samples = 1024;
  std::uint64_t seed = 0;

  static VerifyMode exhaustive(int draws = 32, std::uint64_t seed = 0) {
    return {Kind::Exhaustive, draws, 0, seed};
  }
  static VerifyMode sampled(int count, std::uint64_t seed) {
    return {Kind::Sampled, 0, count, seed};
  }
};

struct VerificationReport {
  bool passed = false;
  std::uint64_t points_checked = 0;
  std::optional<Binding> counterexample;
  std::string mode;
  unsigned width = 0;
  std::uint64_t seed = 0;
  std::string scheme;
};

/// Exhaustive mode throws DomainTooLarge when 2^width * coeff_draws would
/// exceed 2^24 enumerated points.
VerificationReport verify_equivalence(const EvalDag& dag, const Polynomial& poly,
                                      unsigned width, const VerifyMode& mode);

}  // namespace ringopt

#pragma once

#include <string>
#include <vector>

#include "ringopt/analysis.hpp"
#include "ringopt/annotations.hpp"

namespace ringopt {

struct FunctionSig {
  std::string return_type;
  std::string name;
  std::vector<Parameter> parameters;
};

/// Emitted C body for one plan. `adds`/`muls` count the arithmetic
/// operators in the computation statements and always equal the source
/// DAG's cost report (compound coefficient expressions are hoisted into a
/// const preamble that is excluded from the count).
struct EmittedUnit {
  std::string text;  // body text, without the surrounding braces
  std::string scheme_name;
  std::string function_name;
  int adds = 0;
  int muls = 0;
};

EmittedUnit emit_function(const EvalDag& dag, const FunctionSig& sig);

/// Wraps an emitted body into a full function definition.
std::string emit_function_definition(const EvalDag& dag, const FunctionSig& sig);

/// Replaces the body of every annotated function with the selected scheme's
/// emitted body; all bytes outside the body spans are preserved.
std::string transform_source(const std::string& file_text,
                             const std::string& scheme, bool sparse = false);

/// Counts `*` and `+` characters outside comments in a body text; used to
/// cross-check emitted code against cost reports.
std::pair<int, int> textual_op_counts(const std::string& body);

/// Self-contained C99 micro-benchmark: one function per scheme, cycle
/// counter timing of `iterations` evaluations, CSV `scheme,cycles` lines
/// and a final OK/MISMATCH cross-check.
std::string emit_benchmark(int degree, const std::vector<std::string>& schemes,
                           int iterations, unsigned width,
                           std::uint64_t seed = 0);

/// Coefficient values embedded in an emitted benchmark (index = exponent).
std::vector<std::uint64_t> benchmark_coefficients(int degree, unsigned width,
                                                  std::uint64_t seed);

}  // namespace ringopt

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ringopt/analysis.hpp"
#include "ringopt/annotations.hpp"
#include "ringopt/oracle.hpp"

namespace ringopt {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Everything the CLI reports about one annotated function.
struct FunctionReport {
  std::string name;
  std::string ring_pragma;
  std::string math_pragma;
  Polynomial polynomial;
  std::vector<CostReport> costs;
  std::vector<VerificationReport> verifications;
};

Json to_json(const CostReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const FunctionReport& r);

/// Top-level ReportDocument with stable key order.
Json report_document(const std::string& input, std::uint64_t seed,
                     const std::vector<FunctionReport>& functions);

/// Table rendering in the ADDs/MULs layout; `color` adds ANSI bold to
/// headers only.
std::string render_table(const std::vector<FunctionReport>& functions, bool color);

}  // namespace ringopt

#include "ringopt/report.hpp"

#include <iomanip>
#include <sstream>

namespace ringopt {

Json to_json(const CostReport& r) {
  Json j;
  j["scheme"] = r.scheme;
  j["degree"] = r.degree;
  j["adds"] = r.adds;
  j["muls"] = r.muls;
  j["critical_path"] = r.critical_path;
  j["total_ops"] = r.total_ops();
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["scheme"] = r.scheme;
  j["mode"] = r.mode;
  j["width"] = r.width;
  j["seed"] = r.seed;
  j["points_checked"] = r.points_checked;
  j["passed"] = r.passed;
  if (r.counterexample) {
    Json c;
    c["variable_value"] = r.counterexample->variable_value;
    c["coefficient_values"] = Json::object();
    for (const auto& [k, v] : r.counterexample->coefficient_values)
      c["coefficient_values"][k] = v;
    j["counterexample"] = c;
  }
  return j;
}

Json to_json(const FunctionReport& r) {
  Json j;
  j["function"] = r.name;
  j["ring_prop"] = r.ring_pragma;
  j["math_exp"] = r.math_pragma;
  Json p;
  p["variable"] = r.polynomial.variable;
  p["degree"] = r.polynomial.degree();
  p["coefficients"] = Json::array();
  for (const auto& c : r.polynomial.coeffs)
    p["coefficients"].push_back(to_string(c));
  j["polynomial"] = p;
  j["schemes"] = Json::array();
  for (const auto& c : r.costs) j["schemes"].push_back(to_json(c));
  if (!r.verifications.empty()) {
    j["verification"] = Json::array();
    for (const auto& v : r.verifications) j["verification"].push_back(to_json(v));
  }
  return j;
}

Json report_document(const std::string& input, std::uint64_t seed,
                     const std::vector<FunctionReport>& functions) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input;
  j["seed"] = seed;
  j["functions"] = Json::array();
  for (const auto& f : functions) j["functions"].push_back(to_json(f));
  return j;
}

std::string render_table(const std::vector<FunctionReport>& functions, bool color) {
  const char* bold = color ? "\033[1m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream os;
  for (const auto& f : functions) {
    os << bold << "function " << f.name << reset << "  (variable "
       << f.polynomial.variable << ", degree " << f.polynomial.degree() << ")\n";
    os << bold << "  " << std::left << std::setw(14) << "scheme" << std::right
       << std::setw(6) << "ADDs" << std::setw(6) << "MULs" << std::setw(6)
       << "path" << std::setw(7) << "total" << reset << "\n";
    for (const auto& c : f.costs) {
      os << "  " << std::left << std::setw(14) << c.scheme << std::right
         << std::setw(6) << c.adds << std::setw(6) << c.muls << std::setw(6)
         << c.critical_path << std::setw(7) << c.total_ops() << "\n";
    }
    for (const auto& v : f.verifications) {
      os << "  verify " << v.scheme << " (" << v.mode << ", w=" << v.width
         << ", seed=" << v.seed << "): "
         << (v.passed ? "pass" : "FAIL") << ", " << v.points_checked
         << " points";
      if (v.counterexample) {
        os << ", counterexample " << v.counterexample->variable_value << " with";
        for (const auto& [k, val] : v.counterexample->coefficient_values)
          os << " " << k << "=" << val;
      }
      os << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ringopt

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ringopt/expr.hpp"

namespace ringopt {

struct Parameter {
  std::string type;
  std::string name;
};

/// One `ring_prop`/`math_exp` pragma pair bound to the function that
/// immediately follows it in the source text.
struct AnnotatedFunction {
  RingSpec ring;
  ExprPtr math;
  std::string math_text;  // verbatim text inside the math_exp parentheses
  std::string function_name;
  std::string return_type;
  std::vector<Parameter> parameters;
  std::size_t body_begin = 0;  // byte after the opening brace
  std::size_t body_end = 0;    // byte of the closing brace
  std::string variable;        // parameter designated as the polynomial variable
};

/// `#pragma ring_prop (+, 0, -, *, 1) int`
RingSpec parse_ring_prop(const std::string& line);

/// `#pragma math_exp (A0 + A1*x + ...)`; identifiers other than `variable`
/// become coefficient atoms.
ExprPtr parse_math_exp(const std::string& line, const std::string& variable);

/// Parses a bare ring expression (no pragma prefix). Grammar: identifiers,
/// integer literals, + - * ^ ( ); `^` binds tightest and is right
/// associative, then unary -, then *, then binary +/-.
ExprPtr parse_expression(const std::string& text, const std::string& variable);

std::vector<AnnotatedFunction> scan_source(const std::string& file_text);

std::string to_pragma(const RingSpec& ring);
std::string to_pragma(const ExprPtr& math);

}  // namespace ringopt

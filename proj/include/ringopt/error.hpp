#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringopt {

enum class Errc {
  NonPolynomial,
  VariableInExponent,
  EmptyExpression,
  SyntaxError,
  MalformedRingProp,
  UnsupportedCarrier,
  OrphanPragma,
  DuplicatePragma,
  UnbalancedBraces,
  AmbiguousVariable,
  InvalidDag,
  UnboundName,
  DomainTooLarge,
  SignatureMismatch,
  UnsupportedDegree,
  EmptySchemeList,
  NoAnnotatedFunctions,
};

const char* errc_name(Errc c);

/// All library failures throw this; `offset()` is a byte offset into the
/// input text when the error came from parsing/scanning.
class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc c, std::string msg, std::size_t offset = npos)
      : std::runtime_error(std::move(msg)), code_(c), offset_(offset) {}

  Errc code() const { return code_; }
  std::size_t offset() const { return offset_; }
  bool has_offset() const { return offset_ != npos; }

private:
  Errc code_;
  std::size_t offset_;
};

}  // namespace ringopt

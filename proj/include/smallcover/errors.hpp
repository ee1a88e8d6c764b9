#pragma once

#include <stdexcept>
#include <string>

namespace smallcover {

enum class ErrorCode {
  // input / validation
  SchemaError,
  NotSimple,
  NotClosed,
  EulerViolation,
  DuplicateFacet,
  NotPolytopal,
  Disconnected,
  UnknownBuiltin,
  BadParameter,
  BadFacetId,
  BadFace,
  BadVertex,
  MissingFacet,
  InvalidColoring,
  TooLarge,
  NotAFourBelt,
  SimplexExcluded,
  BadGenerator,
  BadIndex,
  BadWord,
  OracleOverflow,
  // internal invariant breaches (CLI exit code 2)
  UnclassifiableSection,
  NotClosedSurface,
  NotClosedManifold,
  InternalInvariant,
};

const char* error_code_name(ErrorCode code);

/// True for codes that indicate a bug in this library rather than bad input.
bool is_internal_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace smallcover

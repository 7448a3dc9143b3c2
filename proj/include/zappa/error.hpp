#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zappa {

enum class ErrorKind {
  kInvalidOrder,
  kInvalidGroup,
  kMalformedPair,
  kMatchedPairInvalid,
  kNotZappaFactorization,
  kMapAlgebraType,
  kNotTwoGenerated,
  kScale,
  kNotInA,
  kUnknownFamily,
  kFamiliesNotComputed,
  kFamilyInapplicable,
  kFamilyParam,
  kFormulaConsistency,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code and a diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zappa

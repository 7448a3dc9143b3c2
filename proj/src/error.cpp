#include "zappa/error.hpp"

namespace zappa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidOrder: return "invalid-order";
    case ErrorKind::kInvalidGroup: return "invalid-group";
    case ErrorKind::kMalformedPair: return "malformed-pair";
    case ErrorKind::kMatchedPairInvalid: return "matched-pair-invalid";
    case ErrorKind::kNotZappaFactorization: return "not-a-zappa-factorization";
    case ErrorKind::kMapAlgebraType: return "map-algebra-type";
    case ErrorKind::kNotTwoGenerated: return "not-two-generated";
    case ErrorKind::kScale: return "scale";
    case ErrorKind::kNotInA: return "not-in-A";
    case ErrorKind::kUnknownFamily: return "unknown-family";
    case ErrorKind::kFamiliesNotComputed: return "families-not-computed";
    case ErrorKind::kFamilyInapplicable: return "family-inapplicable";
    case ErrorKind::kFamilyParam: return "family-param";
    case ErrorKind::kFormulaConsistency: return "formula-consistency";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace zappa

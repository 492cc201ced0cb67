#include "tensorhn/error.hpp"

namespace tensorhn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::InvalidVector: return "InvalidVector";
    case ErrorKind::DegenerateTensor: return "DegenerateTensor";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ZeroTensor: return "ZeroTensor";
    case ErrorKind::NonpositiveTau: return "NonpositiveTau";
    case ErrorKind::InvalidDelta: return "InvalidDelta";
    case ErrorKind::NotUnstable: return "NotUnstable";
    case ErrorKind::TieAnomaly: return "TieAnomaly";
    case ErrorKind::IncompleteSearch: return "IncompleteSearch";
    case ErrorKind::DegenerateFiber: return "DegenerateFiber";
  }
  return "Unknown";
}

}  // namespace tensorhn

#include "nefcone/error.hpp"

namespace nefcone {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnstableSignature: return "UnstableSignature";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::WrongHomeSpace: return "WrongHomeSpace";
    case ErrorCode::UnsupportedBasisElement: return "UnsupportedBasisElement";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NegativeSeed: return "NegativeSeed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace nefcone

#pragma once

#include <stdexcept>
#include <string>

namespace nefcone {

enum class ErrorCode {
  UnstableSignature,
  DuplicateLabel,
  InvalidPair,
  SignatureMismatch,
  WrongHomeSpace,
  UnsupportedBasisElement,
  GenusTooSmall,
  SpecMismatch,
  NotInSpan,
  DependentGenerators,
  BadSplit,
  DimensionTooLarge,
  NegativeSeed,
  SyntaxError,
  UnknownAtom,
  WrongSignature,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nefcone

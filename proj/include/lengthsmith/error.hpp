#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lengthsmith {

enum class ErrorCode {
  kInvalidInput = 1,
  kEmptySet,
  kGeneratorNotInNGe2,
  kDecomposableSingleton,
  kDuplicateGenerator,
  kNotAMember,
  kNoPositiveGrading,
  kNonMinimalGeneratingSet,
  kZeroAtom,
  kDuplicateLabel,
  kDimensionMismatch,
  kNotAnElement,
  kSetNotInNGe2,
  kGroupTooLarge,
  kNotZeroSum,
  kAlphabetMismatch,
  kVerificationFailure,
  kOverflow,
};

/// Stable machine-readable name, e.g. "NotAnElement".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lengthsmith

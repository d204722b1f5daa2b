#include "lengthsmith/error.hpp"

namespace lengthsmith {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kGeneratorNotInNGe2: return "GeneratorNotInNGe2";
    case ErrorCode::kDecomposableSingleton: return "DecomposableSingleton";
    case ErrorCode::kDuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::kNotAMember: return "NotAMember";
    case ErrorCode::kNoPositiveGrading: return "NoPositiveGrading";
    case ErrorCode::kNonMinimalGeneratingSet: return "NonMinimalGeneratingSet";
    case ErrorCode::kZeroAtom: return "ZeroAtom";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotAnElement: return "NotAnElement";
    case ErrorCode::kSetNotInNGe2: return "SetNotInNGe2";
    case ErrorCode::kGroupTooLarge: return "GroupTooLarge";
    case ErrorCode::kNotZeroSum: return "NotZeroSum";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kVerificationFailure: return "VerificationFailure";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace lengthsmith

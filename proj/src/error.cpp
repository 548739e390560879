#include "reesloop/error.hpp"

namespace reesloop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::BadZero: return "BadZero";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::ZeroEntryWithoutZero: return "ZeroEntryWithoutZero";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoZero: return "NoZero";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotASubsemigroup: return "NotASubsemigroup";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::NotInLoopProblem: return "NotInLoopProblem";
    case ErrorCode::HasZero: return "HasZero";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::RestrictionNotOntoT: return "RestrictionNotOntoT";
    case ErrorCode::NoUnitInP: return "NoUnitInP";
    case ErrorCode::NotCompletelyZeroSimple: return "NotCompletelyZeroSimple";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace reesloop

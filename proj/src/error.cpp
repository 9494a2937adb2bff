#include "fourdom/error.hpp"

namespace fourdom {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnimodularAfterAugmentation: return "NotUnimodularAfterAugmentation";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::UnsupportedPi1Combination: return "UnsupportedPi1Combination";
    case ErrorCode::Pi1Mismatch: return "Pi1Mismatch";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fourdom

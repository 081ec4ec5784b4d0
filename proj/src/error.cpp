#include "pav/error.hpp"

namespace pav {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadStep: return "BadStep";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::NegativeExcursion: return "NegativeExcursion";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::Not321Avoiding: return "Not321Avoiding";
    case ErrorCode::Not231Avoiding: return "Not231Avoiding";
    case ErrorCode::NotReconstructible: return "NotReconstructible";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pav

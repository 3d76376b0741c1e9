#include "selmer/error.hpp"

namespace selmer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularModel: return "SingularModel";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::BadAtP: return "BadAtP";
    case ErrorCode::AdditiveReduction: return "AdditiveReduction";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::UnsupportedP: return "UnsupportedP";
    case ErrorCode::DegenerateExtension: return "DegenerateExtension";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DivisionByEll: return "DivisionByEll";
    case ErrorCode::InvalidJump: return "InvalidJump";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::RangeTooLarge: return "RangeTooLarge";
    case ErrorCode::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorCode::InconclusivePrecision: return "InconclusivePrecision";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::UnsupportedTower: return "UnsupportedTower";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace selmer

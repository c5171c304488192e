#ifndef QUADRAFORM_ERRORS_HPP
#define QUADRAFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadraform {

enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  DegenerateForm,
  NotScalarPlusNilpotent,
  HypothesisViolated,
  InvalidPhi,
  BadGamma,
  BadXi,
  NotDerivation,
  NotSkew,
  BadCenterVector,
  CompatibilityFailed,
  ConditionFailed,
  NotPerfect,
  WrongNilIndex,
  InternalInconsistency,
  LimitExceeded,
};

/// Carries a machine-readable code plus a human-readable witness message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

  const char* code_name() const {
    switch (code_) {
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::DimensionMismatch: return "DimensionMismatch";
      case ErrorCode::DegenerateForm: return "DegenerateForm";
      case ErrorCode::NotScalarPlusNilpotent: return "NotScalarPlusNilpotent";
      case ErrorCode::HypothesisViolated: return "HypothesisViolated";
      case ErrorCode::InvalidPhi: return "InvalidPhi";
      case ErrorCode::BadGamma: return "BadGamma";
      case ErrorCode::BadXi: return "BadXi";
      case ErrorCode::NotDerivation: return "NotDerivation";
      case ErrorCode::NotSkew: return "NotSkew";
      case ErrorCode::BadCenterVector: return "BadCenterVector";
      case ErrorCode::CompatibilityFailed: return "CompatibilityFailed";
      case ErrorCode::ConditionFailed: return "ConditionFailed";
      case ErrorCode::NotPerfect: return "NotPerfect";
      case ErrorCode::WrongNilIndex: return "WrongNilIndex";
      case ErrorCode::InternalInconsistency: return "InternalInconsistency";
      case ErrorCode::LimitExceeded: return "LimitExceeded";
    }
    return "Unknown";
  }

private:
  ErrorCode code_;
};

}  // namespace quadraform

#endif

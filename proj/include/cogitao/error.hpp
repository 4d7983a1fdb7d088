#pragma once

#include <stdexcept>
#include <string>

namespace cogitao {

enum class ErrorCode {
    DimensionOutOfRange,
    OutOfBounds,
    Overlap,
    TouchViolation,
    NoMatch,
    PlacementFailed,
    TargetUnreachable,
    MaxTrialsExceeded,
    ConstraintViolated,
    DegenerateResult,
    DepthExceeded,
    ExhaustedUniquePool,
    UnknownExperiment,
    MissingPrediction,
    DimensionMismatch,
    IoError,
    SchemaError,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorCode::OutOfBounds: return "OutOfBounds";
        case ErrorCode::Overlap: return "Overlap";
        case ErrorCode::TouchViolation: return "TouchViolation";
        case ErrorCode::NoMatch: return "NoMatch";
        case ErrorCode::PlacementFailed: return "PlacementFailed";
        case ErrorCode::TargetUnreachable: return "TargetUnreachable";
        case ErrorCode::MaxTrialsExceeded: return "MaxTrialsExceeded";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::DegenerateResult: return "DegenerateResult";
        case ErrorCode::DepthExceeded: return "DepthExceeded";
        case ErrorCode::ExhaustedUniquePool: return "ExhaustedUniquePool";
        case ErrorCode::UnknownExperiment: return "UnknownExperiment";
        case ErrorCode::MissingPrediction: return "MissingPrediction";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }  // without the code prefix

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace cogitao

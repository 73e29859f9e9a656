#pragma once

#include <stdexcept>
#include <string>

namespace propcalc {

enum class ErrorKind {
    ShapeMismatch,
    SquareZeroViolation,
    TruncationExceeded,
    ArityMismatch,
    FactorizationFailure,
    NoSolution,
    InconsistentPresentation,
    CompatibilityFailure,
    ZigzagViolation,
    ParseError,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::SquareZeroViolation: return "SquareZeroViolation";
        case ErrorKind::TruncationExceeded: return "TruncationExceeded";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::FactorizationFailure: return "FactorizationFailure";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
        case ErrorKind::CompatibilityFailure: return "CompatibilityFailure";
        case ErrorKind::ZigzagViolation: return "ZigzagViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace propcalc

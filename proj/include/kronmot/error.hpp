#pragma once

#include <stdexcept>
#include <string>

namespace kronmot {

enum class ErrorKind {
    InvalidArgument,
    DivisionByZero,
    NonPolynomial,
    NonCoprime,
    NotInvertible,
    NonZeroConstant,
    InsufficientBound,
    ExactDivisionFailure,
    NoConvergence,
    NonInteger,
    ResourceLimit,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying one of the failure kinds above. Everything thrown by
/// the library is a kronmot::Error, so callers can map kinds to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonPolynomial: return "NonPolynomial";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NonZeroConstant: return "NonZeroConstant";
    case ErrorKind::InsufficientBound: return "InsufficientBound";
    case ErrorKind::ExactDivisionFailure: return "ExactDivisionFailure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace kronmot

#pragma once

#include <stdexcept>
#include <string>

namespace qp {

enum class ErrorKind {
    DivisionByZero,
    PoleAtPoint,
    PoleAtOne,
    NonInvertible,
    NonInvertibleCommutator,
    UnsupportedNegativePower,
    ParseError,
};

/// All math errors raised by the engine. `kind` drives the CLI exit code
/// (parse errors exit 1, math errors exit 2).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::NonInvertibleCommutator: return "NonInvertibleCommutator";
    case ErrorKind::UnsupportedNegativePower: return "UnsupportedNegativePower";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace qp

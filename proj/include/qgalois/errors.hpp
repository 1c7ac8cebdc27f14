#pragma once

#include <stdexcept>
#include <string>

namespace qgalois {

// Bad run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Literal syntax error, carries the offset into the input text.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Domain violations: division by zero, inverting a nilpotent monomial, ...
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structure solver produced no / ambiguous / inconsistent output.
// Signals a bug or an impossible configuration (CLI exit code 3).
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction-time consistency check failed.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qgalois

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace perron {

enum class ErrorKind {
    Parse,
    InvalidArgument,
    NotIrreducible,
    NotPerron,
    Indeterminate,
    PrecisionExhausted,
    BudgetExceeded,
    DivisionInexact,
    CertificationFailed,
    ThresholdNotMet,
    PositivityFailed,
    NotInSemigroup,
    NotFound,
    DimensionTooLarge,
    DegenerateMatrix,
    VerificationFailed,
    Io,
};

const char* to_string(ErrorKind kind);

// Stable process exit status for each error kind (0 is success).
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& message, std::uint64_t partial)
        : Error(ErrorKind::BudgetExceeded, message), partial_(partial) {}

    // Work units (points, matrices) completed before the budget ran out.
    std::uint64_t partial() const { return partial_; }

private:
    std::uint64_t partial_;
};

}  // namespace perron

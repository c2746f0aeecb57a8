#include "perron/errors.hpp"

namespace perron {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotPerron: return "NotPerron";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DivisionInexact: return "DivisionInexact";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::ThresholdNotMet: return "ThresholdNotMet";
    case ErrorKind::PositivityFailed: return "PositivityFailed";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::InvalidArgument: return 2;
    case ErrorKind::NotIrreducible: return 3;
    case ErrorKind::NotPerron: return 4;
    case ErrorKind::Indeterminate: return 5;
    case ErrorKind::PrecisionExhausted: return 5;
    case ErrorKind::BudgetExceeded: return 6;
    case ErrorKind::DivisionInexact: return 7;
    case ErrorKind::CertificationFailed: return 7;
    case ErrorKind::ThresholdNotMet: return 8;
    case ErrorKind::PositivityFailed: return 9;
    case ErrorKind::NotInSemigroup: return 10;
    case ErrorKind::NotFound: return 11;
    case ErrorKind::DimensionTooLarge: return 12;
    case ErrorKind::DegenerateMatrix: return 13;
    case ErrorKind::VerificationFailed: return 14;
    case ErrorKind::Io: return 15;
    }
    return 1;
}

}  // namespace perron

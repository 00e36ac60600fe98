#include "orenorm/errors.hpp"

namespace orenorm {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotASubfieldLevel: return "NotASubfieldLevel";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::InvalidRing: return "InvalidRing";
        case ErrorKind::InvalidDerivation: return "InvalidDerivation";
        case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case ErrorKind::GcrdWithTNotOne: return "GcrdWithTNotOne";
        case ErrorKind::NormNotCentral: return "NormNotCentral";
        case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
        case ErrorKind::InfiniteConstantField: return "InfiniteConstantField";
        case ErrorKind::CriterionNotSatisfied: return "CriterionNotSatisfied";
        case ErrorKind::ExtractionDegreeMismatch: return "ExtractionDegreeMismatch";
        case ErrorKind::RepeatedCentralFactors: return "RepeatedCentralFactors";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace orenorm

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orenorm {

enum class ErrorKind {
    NonPrimeCharacteristic,
    ReducibleModulus,
    InvalidModulus,
    FieldTooLarge,
    FieldMismatch,
    NotASubfieldLevel,
    DivisionByZero,
    RingMismatch,
    InvalidRing,
    InvalidDerivation,
    DivisionByZeroPolynomial,
    GcrdWithTNotOne,
    NormNotCentral,
    NonzeroRemainder,
    InfiniteConstantField,
    CriterionNotSatisfied,
    ExtractionDegreeMismatch,
    RepeatedCentralFactors,
    BudgetExceeded,
    InvalidAlgebra,
    InvalidArgument,
    ParseError,
    Internal,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. `what()` is prefixed with the error name so
/// that messages passed through the CLI still identify the failing constraint.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

   private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace orenorm

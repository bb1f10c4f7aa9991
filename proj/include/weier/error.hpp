#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weier {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    InvalidGrowth,
    OutOfRange,
    ArityMismatch,
    InvalidPrecision,
    PrecisionIncrease,
    InvalidWeights,
    NotDistinguished,
    WeightSearchExhausted,
    NotAUnit,
    ContractionViolated,
    IterationBudgetExceeded,
    NotWeierstrass,
    NotDivisibleByYd,
    HypothesisFails,
    ZeroSeries,
    PrecisionUnderflow,
    UnsupportedField,
    DegreeTooLarge,
    NotCoprime,
    NotMonic,
    LiftMismatch,
    InvalidArgument,
    SyntaxError,
    CoefficientParseError,
    YExponentExceedsPrecision,
    InternalError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the kernel. `position` is set for parse errors only.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> position = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

}  // namespace weier

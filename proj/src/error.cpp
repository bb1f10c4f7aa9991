#include "weier/error.hpp"

namespace weier {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidGrowth: return "InvalidGrowth";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidPrecision: return "InvalidPrecision";
    case ErrorKind::PrecisionIncrease: return "PrecisionIncrease";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::NotDistinguished: return "NotDistinguished";
    case ErrorKind::WeightSearchExhausted: return "WeightSearchExhausted";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ContractionViolated: return "ContractionViolated";
    case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorKind::NotWeierstrass: return "NotWeierstrass";
    case ErrorKind::NotDivisibleByYd: return "NotDivisibleByYd";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::PrecisionUnderflow: return "PrecisionUnderflow";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::LiftMismatch: return "LiftMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::CoefficientParseError: return "CoefficientParseError";
    case ErrorKind::YExponentExceedsPrecision: return "YExponentExceedsPrecision";
    case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), kind_(kind), position_(position)
{
}

}  // namespace weier

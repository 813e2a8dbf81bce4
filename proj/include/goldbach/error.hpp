#ifndef GOLDBACH_ERROR_HPP
#define GOLDBACH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace goldbach {

enum class ErrorKind {
    SyntaxError,
    UnknownVariable,
    InvalidModulus,
    FieldMismatch,
    ArityMismatch,
    DivisionByZero,
    PivotOutOfRange,
    ReplacementUsesPivot,
    DimensionMismatch,
    DegenerateSegment,
    ApexInBaseHyperplane,
    ZeroExponent,
    ArityTooSmall,
    WitnessRejected,
    DenominatorNotInSystem,
    NotApplicable,
    BudgetExceeded,
    EmptyInterval,
    NotInSystem,
    PivotCoefficientZero,
    UnsupportedArity,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

/// Domain error carrying a machine-checkable kind next to the human message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::PivotOutOfRange: return "PivotOutOfRange";
        case ErrorKind::ReplacementUsesPivot: return "ReplacementUsesPivot";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegenerateSegment: return "DegenerateSegment";
        case ErrorKind::ApexInBaseHyperplane: return "ApexInBaseHyperplane";
        case ErrorKind::ZeroExponent: return "ZeroExponent";
        case ErrorKind::ArityTooSmall: return "ArityTooSmall";
        case ErrorKind::WitnessRejected: return "WitnessRejected";
        case ErrorKind::DenominatorNotInSystem: return "DenominatorNotInSystem";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::EmptyInterval: return "EmptyInterval";
        case ErrorKind::NotInSystem: return "NotInSystem";
        case ErrorKind::PivotCoefficientZero: return "PivotCoefficientZero";
        case ErrorKind::UnsupportedArity: return "UnsupportedArity";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace goldbach

#endif

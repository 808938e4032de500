#include "natq/error.hpp"

namespace natq {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::BadUnit: return "BadUnit";
        case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
        case ErrorKind::MalformedRelation: return "MalformedRelation";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotAutomorphism: return "NotAutomorphism";
        case ErrorKind::CharacteristicDividesOrder: return "CharacteristicDividesOrder";
        case ErrorKind::NotIdempotentModR: return "NotIdempotentModR";
        case ErrorKind::NotSemisimple: return "NotSemisimple";
        case ErrorKind::SplitFailure: return "SplitFailure";
        case ErrorKind::NotSplitting: return "NotSplitting";
        case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
        case ErrorKind::CyclicNaturalQuiver: return "CyclicNaturalQuiver";
        case ErrorKind::BadDecoration: return "BadDecoration";
        case ErrorKind::NotAnIdeal: return "NotAnIdeal";
        case ErrorKind::ContainmentViolated: return "ContainmentViolated";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
        case ErrorKind::NonComposablePath: return "NonComposablePath";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace natq

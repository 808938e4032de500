#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace natq {

enum class ErrorKind {
    InvalidField,
    ZeroPolynomial,
    DimensionMismatch,
    NotAssociative,
    BadUnit,
    InfiniteDimensional,
    MalformedRelation,
    NotIdempotent,
    FieldMismatch,
    NotAutomorphism,
    CharacteristicDividesOrder,
    NotIdempotentModR,
    NotSemisimple,
    SplitFailure,
    NotSplitting,
    NonIntegralDimension,
    CyclicNaturalQuiver,
    BadDecoration,
    NotAnIdeal,
    ContainmentViolated,
    ParseError,
    UndeclaredSymbol,
    NonComposablePath,
    Internal,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above; the CLI
/// prints the kind name verbatim so callers can match on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace natq

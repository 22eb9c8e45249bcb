#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace friezelab {

enum class ErrorKind {
    VariableMismatch,
    NotDivisible,
    ZeroToNegativePower,
    ParseError,
    NonPositiveEntry,
    InvalidFrieze,
    InvalidQuiddity,
    NotFound,
    NoRestoringPermutation,
    AmbiguousPermutation,
    NotFig5Shape,
    FrozenVertex,
    MissingDoubleArrow,
    NotAffine,
    InadmissiblePrime,
    InsufficientPrimes,
    NonPolynomialCount,
    InvalidRepresentation,
    FixtureMissing,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every module error carries a kind so the CLI can emit a machine-readable object.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace friezelab

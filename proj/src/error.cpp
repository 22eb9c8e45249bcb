#include "friezelab/error.hpp"

namespace friezelab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorKind::InvalidFrieze: return "InvalidFrieze";
        case ErrorKind::InvalidQuiddity: return "InvalidQuiddity";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::NoRestoringPermutation: return "NoRestoringPermutation";
        case ErrorKind::AmbiguousPermutation: return "AmbiguousPermutation";
        case ErrorKind::NotFig5Shape: return "NotFig5Shape";
        case ErrorKind::FrozenVertex: return "FrozenVertex";
        case ErrorKind::MissingDoubleArrow: return "MissingDoubleArrow";
        case ErrorKind::NotAffine: return "NotAffine";
        case ErrorKind::InadmissiblePrime: return "InadmissiblePrime";
        case ErrorKind::InsufficientPrimes: return "InsufficientPrimes";
        case ErrorKind::NonPolynomialCount: return "NonPolynomialCount";
        case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorKind::FixtureMissing: return "FixtureMissing";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace friezelab

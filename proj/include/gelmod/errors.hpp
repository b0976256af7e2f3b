#pragma once

#include <stdexcept>
#include <string>

namespace gelmod {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic layer
struct NotDivisible : Error { using Error::Error; };
struct NonInvertibleConstantTerm : Error { using Error::Error; };
struct NonIntegralResult : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Combinatorics layer
struct PadTooSmall : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct OddNegativeClass : Error { using Error::Error; };

// Group layer
struct InvalidLabel : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct OrderExceedsCap : Error { using Error::Error; };
struct MissingSplitTag : Error { using Error::Error; };

// CLI layer
struct ParseError : Error { using Error::Error; };
struct UnknownType : Error { using Error::Error; };

} // namespace gelmod

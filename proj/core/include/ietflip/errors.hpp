#pragma once

#include <stdexcept>
#include <string>

namespace ietflip {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / input errors
struct BasisMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonPositiveLength : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidCounts : Error { using Error::Error; };
struct WordInapplicable : Error { using Error::Error; };
struct TargetMismatch : Error { using Error::Error; };

// Dynamical errors: the input is valid but sits outside the domain where the
// algorithms are defined, or a resource cap was hit before termination.
struct DynamicalError : Error { using Error::Error; };
struct NotInPStar : DynamicalError { using DynamicalError::DynamicalError; };
struct TieEncountered : DynamicalError { using DynamicalError::DynamicalError; };
struct CapExceeded : DynamicalError { using DynamicalError::DynamicalError; };
struct DegenerateBlock : DynamicalError { using DynamicalError::DynamicalError; };
struct OrbitHalted : DynamicalError { using DynamicalError::DynamicalError; };

// A verified invariant failed on a concrete sample.
struct HarnessFailure : Error { using Error::Error; };

} // namespace ietflip

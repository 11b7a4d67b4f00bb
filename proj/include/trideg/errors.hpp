#pragma once

#include <stdexcept>
#include <string>

namespace trideg {

// Base class for all recoverable library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched sizes: point length vs variable count, non-square determinant, ...
struct DimensionError : Error {
    using Error::Error;
};

// Domain violations: zero form where nonzero required, singular change of
// coordinates, violated operation precondition.
struct ValueError : Error {
    using Error::Error;
};

// Classification and reduction reject the all-zero tensor explicitly.
struct ZeroTensorError : Error {
    ZeroTensorError() : Error("tensor is identically zero") {}
};

// Operation not defined for this tensor format.
struct FormatError : Error {
    using Error::Error;
};

// Malformed tensor document / CLI input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace trideg

#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AsymmetricMatrix : Error { using Error::Error; };
struct NegativeEntry : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct SizeCapExceeded : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct PreconditionsNotMet : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace spectra

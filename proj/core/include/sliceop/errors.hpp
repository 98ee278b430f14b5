#pragma once

#include <stdexcept>
#include <string>

namespace sliceop {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDivision : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct RangeViolation : Error { using Error::Error; };
struct NotSlicePreserving : Error { using Error::Error; };
struct NotSelfMap : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct UnsupportedMap : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
// Malformed input data; the message carries position diagnostics.
struct FormatError : Error { using Error::Error; };

}  // namespace sliceop

#pragma once

#include <stdexcept>

namespace polystego {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data: unparsable files, bad polynomial text, bad values.
struct FormatError : Error {
  using Error::Error;
};

/// Inputs that are individually fine but inconsistent with each other or
/// with the code in use: wrong message length, cost map shorter than the
/// cover, polynomial too large for its slot.
struct CapacityError : Error {
  using Error::Error;
};

/// Embedding strategy incompatible with the code in use.
struct StrategyError : Error {
  using Error::Error;
};

/// A size or iteration guard tripped (brute-force caps, parity matrix bound).
struct GuardError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by the zero polynomial") {}
};

// The two oversized-operand cases of the base-modifier computation are
// reported as distinct types.
struct CoverSizeError : CapacityError {
  using CapacityError::CapacityError;
};
struct MessageSizeError : CapacityError {
  using CapacityError::CapacityError;
};

}  // namespace polystego

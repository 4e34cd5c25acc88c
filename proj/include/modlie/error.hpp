#pragma once

#include <stdexcept>
#include <string>

namespace modlie {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct UnsupportedIdentity : Error {
  using Error::Error;
};

struct WrongCharacteristic : Error {
  using Error::Error;
};

struct UnsupportedCenter : Error {
  using Error::Error;
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotADerivation : Error {
  using Error::Error;
};

struct NotARepresentation : Error {
  using Error::Error;
};

struct ResourceBudget : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace modlie

#pragma once

#include <stdexcept>
#include <string>

namespace carry {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// p < 2 or p not prime.
class InvalidCharacteristic : public Error {
public:
  using Error::Error;
};

/// Malformed or mismatched arguments (wrong degree, wrong context, bad index).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A derived quantity does not fit in 64 bits.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// The multiplication-map calculus is undefined (one variable, or every
/// digit position full).
class DegenerateContext : public Error {
public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Character peeling hit a non-dominant top weight or failed to terminate.
class MalformedCharacter : public Error {
public:
  using Error::Error;
};

/// Parse failure on one of the text or JSON formats.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace carry

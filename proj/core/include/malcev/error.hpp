#pragma once

#include <stdexcept>
#include <string>

namespace malcev {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed term, identity, signature or algebra text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A term or identity uses a symbol the algebra/variety does not declare, or
// declares it with another arity.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// Precondition on an argument violated (not a congruence, not a band, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A variety was asked a question its presentation cannot answer
// (no decision procedure, or no equational base).
class MissingPresentation : public Error {
 public:
  using Error::Error;
};

}  // namespace malcev

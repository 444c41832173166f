#pragma once

#include <stdexcept>
#include <string>

namespace rcpower {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group spec violates a parameter constraint, or its text does not parse.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A raw multiplication table fails the group axioms.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

/// A construction's hypotheses do not hold for the given group.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class GroupTooSmall : public Error {
 public:
  using Error::Error;
};

class NoApplicableClaim : public Error {
 public:
  using Error::Error;
};

/// Malformed coloring/certificate text or catalog text.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcpower

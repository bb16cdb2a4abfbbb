#pragma once

#include <stdexcept>
#include <string>

namespace oscoh {

/// Base class for every error raised by the engine. CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroFormError : public Error {
 public:
  using Error::Error;
};

class NotEssentialError : public Error {
 public:
  using Error::Error;
};

class NotPrimeError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscoh

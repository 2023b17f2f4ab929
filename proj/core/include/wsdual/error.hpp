#pragma once

#include <stdexcept>
#include <string>

namespace wsdual {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad text, wrong dimensions, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but violates a mathematical premise the
/// computation depends on (non-integral exponent, singular B, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace wsdual

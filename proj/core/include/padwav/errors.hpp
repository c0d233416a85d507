#pragma once

#include <stdexcept>
#include <string>

namespace padwav {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal or file content.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (non-prime p, zero inverse, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The digit window of an operand does not determine the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace padwav

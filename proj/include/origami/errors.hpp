#pragma once

#include <stdexcept>
#include <string>

namespace origami {

// Base class for every error raised by the library. Each subclass marks one
// failure mode so callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParallelLines : public Error {
 public:
  ParallelLines() : Error("lines are parallel: angles are equal modulo sign") {}
};

class DegenerateReal : public Error {
 public:
  using Error::Error;
};

class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PrecisionTooLow : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

}  // namespace origami

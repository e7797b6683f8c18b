#pragma once

#include <stdexcept>
#include <string>

namespace goorbit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A computed object failed one of its defining checks (Jacobi, closure,
// positivity, two independent computations disagreeing, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace goorbit

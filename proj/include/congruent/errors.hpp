#pragma once

#include <stdexcept>
#include <string>

namespace congruent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed rational or record text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

// An unfactored composite cofactor remained after the configured budget.
class FactorizationLimitExceeded : public Error {
 public:
  using Error::Error;
};

// x equals tau, the pole of y = (tau*x + 1)/(x - tau).
class PoleInput : public Error {
 public:
  using Error::Error;
};

class NonIntegralInverseTau : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangle : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

}  // namespace congruent

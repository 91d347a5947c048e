#pragma once

#include <stdexcept>
#include <string>

namespace spinparity {

// Base of every error thrown by the library. The CLI maps all of them to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input lies outside a documented bound (64-bit-safe range, factorization
// bound, brute-force cap). The message names the bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of a classical formula does not hold
// (e.g. gcd(a, k) > 1 for the Gauss-Schering count).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A stratum signature violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

}  // namespace spinparity

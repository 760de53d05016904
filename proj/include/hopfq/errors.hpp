#pragma once

#include <stdexcept>
#include <string>

namespace hopfq {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was not met (level mismatch, unnormalized state, bad index).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Requested qubit count is outside {1, 2, 3}.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

// A factorization was requested for a state that is entangled across the cut.
class SeparabilityViolation : public Error {
 public:
  using Error::Error;
};

// Malformed state spec or document text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfq

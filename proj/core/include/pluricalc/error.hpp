#pragma once

#include <stdexcept>
#include <string>

namespace pluricalc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class InvalidTypeError : public Error {
 public:
  using Error::Error;
};

// The intersection matrix of the curves to contract is not negative definite.
class NotContractibleError : public Error {
 public:
  using Error::Error;
};

// Some log discrepancy is <= 0; only klt germs are supported.
class NonKltError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// m0 fails a divisibility requirement.
class InvalidM0Error : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class SearchTooLargeError : public Error {
 public:
  using Error::Error;
};

class FanError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pluricalc

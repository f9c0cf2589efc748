#pragma once

#include <stdexcept>
#include <string>

namespace hadamard {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operator (interval, order, grid).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma evaluated at zero or a negative integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A FunctionSpec was asked for a derivative it cannot provide.
class DerivativeUnavailable : public Error {
 public:
  using Error::Error;
};

/// Lookup beyond a fixed-size table (Stirling numbers).
class TableRangeError : public Error {
 public:
  using Error::Error;
};

/// Quadrature request exceeding the node budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two sampled series do not share a grid, or a grid is not increasing.
class GridError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An ODE state component became NaN or infinite.
class NonFiniteState : public Error {
 public:
  using Error::Error;
};

}  // namespace hadamard

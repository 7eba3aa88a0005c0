#pragma once

#include <stdexcept>
#include <string>

namespace fcad {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonHermitian : public Error {
 public:
  using Error::Error;
};

class NotDensityMatrix : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function (eta, x of H2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class EtaOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotTracePreserving : public Error {
 public:
  using Error::Error;
};

class ZeroSubspaceWeight : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fcad

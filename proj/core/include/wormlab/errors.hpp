#pragma once

#include <stdexcept>
#include <string>

namespace wormlab {

// Every failure raised by the library derives from Error. name() is the
// stable identifier printed by the CLI on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "ParseError"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "IoError"; }
};

class NonConvergence : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "NonConvergence"; }
};

// Input is well-formed but outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "DomainError"; }
};

class OriginNotInterior : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "OriginNotInterior"; }
};

class SingularMap : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "SingularMap"; }
};

class Degenerate : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "Degenerate"; }
};

class InvalidParam : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "InvalidParam"; }
};

class ZeroLength : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "ZeroLength"; }
};

class NormalizationError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* name() const noexcept override { return "NormalizationError"; }
};

}  // namespace wormlab

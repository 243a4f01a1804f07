#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylcurve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different coefficient rings (different p, m, or modulus).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Zero operator or zero polynomial where a nonzero one is required.
class ZeroInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation would exceed a configured size cap. Carries the estimated cost.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t cap)
      : Error(what + ": estimated cost " + std::to_string(estimate) + " exceeds cap " +
              std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

/// A mathematical guarantee failed to hold. Signals an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace weylcurve

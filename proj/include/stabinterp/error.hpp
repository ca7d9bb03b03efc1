#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabinterp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two knots compare equal.
class DistinctnessViolation : public Error {
 public:
  DistinctnessViolation(std::size_t first, std::size_t second)
      : Error("knots " + std::to_string(first) + " and " +
              std::to_string(second) + " are equal"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// NaN or infinity where a finite scalar is required.
class InvalidScalar : public Error {
 public:
  using Error::Error;
};

/// Sequence lengths do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Ordering requested that is not defined for the data (monotone on complex knots).
class OrderingDomainError : public Error {
 public:
  using Error::Error;
};

/// Intermediate product became non-finite.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Sensitivity ratio with a vanishing denominator.
class DegenerateConditioning : public Error {
 public:
  using Error::Error;
};

/// Input does not meet an operation's stated precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration; `field()` names the offending option.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Malformed knot or value file.
class InputFormatError : public Error {
 public:
  InputFormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stabinterp

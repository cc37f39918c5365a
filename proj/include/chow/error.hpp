#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chow {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text or spec file. Maps to CLI exit code 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

// Caller violated a precondition: unknown variable, mismatched table,
// index out of range, division by zero, point outside a chart.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A spec file that is valid JSON but does not follow the schema. Exit code 2.
class SpecError : public Error {
 public:
  using Error::Error;
};

class NotNilpotentError : public Error {
 public:
  NotNilpotentError() : Error("not locally nilpotent within bound") {}
};

// The boundary analysis could not complete: missing content candidates,
// a chart lift collapsed, or the orbit factor does not divide the limit form.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace chow

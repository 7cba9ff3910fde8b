#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

// A precondition on the mathematical input failed (inhomogeneous ideal, wrong
// Hilbert polynomial, n out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace hilbkit

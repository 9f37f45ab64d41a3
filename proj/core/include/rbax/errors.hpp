#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbax {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. Carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structurally valid input that violates an algebraic precondition:
// broken alternation, letters illegal for the base, context mismatches.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (recursion depth, enumeration size) was hit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace rbax

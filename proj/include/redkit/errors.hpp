#pragma once

#include <stdexcept>
#include <string>

namespace redkit {

// Common base so callers can catch library failures distinctly from std bugs.
struct RedkitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed. line is 1-based; 0 means unknown.
struct ParseError : RedkitError {
  int line = 0;
  explicit ParseError(const std::string& msg, int line_no = 0)
      : RedkitError(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

// A caller-supplied parameter is outside the operation's domain.
struct ParameterError : RedkitError {
  using RedkitError::RedkitError;
};

// A configured brute-force cap would be exceeded. Hard error, never truncation.
struct CapacityError : RedkitError {
  using RedkitError::RedkitError;
};

// An instance violates a structural invariant.
struct StructuralError : RedkitError {
  using RedkitError::RedkitError;
};

}  // namespace redkit

#pragma once
// Exception types shared across the library.

#include <stdexcept>
#include <string>

namespace ncdeform {

// Two operands belong to different algebra signatures.
struct SignatureMismatch : std::invalid_argument {
  explicit SignatureMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text or JSON. line/col are 1-based; col 0 means "whole line".
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

// A caller-supplied object broke its contract (inconsistent oracle,
// malformed product table). Computation is aborted, never repaired.
struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncdeform

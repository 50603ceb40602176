#pragma once

#include <stdexcept>
#include <string>

namespace qboltz {

// Internal numerical consistency check failed (overflowed partition sum,
// imaginary trace residue, mismatched dual entropy forms, ...). The CLI maps
// this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed model file; carries the 1-based line number of the offence.
class ModelParseError : public std::runtime_error {
 public:
  ModelParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qboltz

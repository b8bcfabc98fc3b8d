#pragma once

#include <stdexcept>
#include <string>

namespace recore {

// Syntax or structural error in an input file. Carries the 1-based line
// number the error was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Semantically invalid input (e.g. a start state that is not a dominating
// set, or mismatched state sizes under token jumping).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An explicit-state computation refused to run because it would exceed a
// configured enumeration or state-count limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace recore

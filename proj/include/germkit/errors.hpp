#pragma once

#include <stdexcept>
#include <string>

namespace germkit {

// Bad user input: malformed files, violated preconditions. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure carrying the 1-based line number of the offending directive.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A cluster whose intersection form is not negative definite.
class ContractibilityError : public InputError {
 public:
  using InputError::InputError;
};

// Two independent computations disagreed; always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace germkit

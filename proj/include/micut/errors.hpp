#pragma once

#include <stdexcept>
#include <string>

namespace micut {

// Malformed input text. `line` is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance exceeds a configured exhaustive-search limit.
class LimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a documented operation precondition.
class PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A solution failed a verification it was contractually required to pass.
class CertificateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace micut

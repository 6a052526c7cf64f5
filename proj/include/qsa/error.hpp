#pragma once

#include <stdexcept>
#include <string>

namespace qsa {

// Raised for any input that violates an operation's contract.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qsa

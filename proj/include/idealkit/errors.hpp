#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealkit {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A table, decomposition or identity failed its exact verification.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Minimal primes of P+Q requested for two primes neither of which is
// generated by variables.
struct UnsupportedPair : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace idealkit

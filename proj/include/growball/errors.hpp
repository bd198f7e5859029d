#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace growball {

// Malformed input text (graph files, bundle dumps, oracle snapshots).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Well-formed input that violates a domain rule (e.g. negative weight).
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Caller passed an argument outside an operation's documented range.
class ParameterError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An internal invariant or a cross-module contract was broken; always a bug
// in the caller or in this library, never a data problem.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace growball

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commevo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// No edges remain after cleaning; both objectives divide by m.
class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("empty graph") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Caller broke a precondition (size mismatch, stale ranking, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid or infeasible parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace commevo

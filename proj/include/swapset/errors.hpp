#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapset {

// Raised when an operation is called outside its documented domain
// (a non-tree passed to a tree routine, mismatched set sizes, ...).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact solver is asked for more than its configured cap.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Raised when a constructive routine cannot produce a valid certificate.
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace swapset

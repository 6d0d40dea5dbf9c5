#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordlab {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or non-canonical textual input. `position` is the byte offset
// into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Violated precondition or out-of-domain argument.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured search or iteration budget ran out before an answer was
// reached. `spent` reports how much of the budget was consumed.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& message, std::uint64_t spent)
      : Error(message), spent_(spent) {}

  std::uint64_t spent() const noexcept { return spent_; }

 private:
  std::uint64_t spent_;
};

}  // namespace ordlab

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fo2 {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multiplication table failed the associativity law. Carries one witness.
struct NonAssociativeError : Error {
  int a, b, c;
  NonAssociativeError(int a_, int b_, int c_)
      : Error("table is not associative at (" + std::to_string(a_) + ", " +
              std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

/// Claimed identity element fails the identity law.
struct BadIdentityError : Error {
  int witness;
  explicit BadIdentityError(int witness_)
      : Error("identity law fails at element " + std::to_string(witness_)),
        witness(witness_) {}
};

/// An element index lies outside [0, size).
struct IndexOutOfRangeError : Error {
  using Error::Error;
};

/// Input text could not be parsed. Position is 1-based.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what_, std::size_t position_)
      : Error(what_ + " at position " + std::to_string(position_)),
        position(position_) {}
};

/// A language was given over no letters at all.
struct EmptyAlphabetError : Error {
  EmptyAlphabetError() : Error("alphabet is empty") {}
};

/// A word contains a letter the morphism does not define.
struct UnknownLetterError : Error {
  char letter;
  explicit UnknownLetterError(char letter_)
      : Error(std::string("unknown letter '") + letter_ + "'"), letter(letter_) {}
};

/// A term mentions a variable the valuation does not cover.
struct UnboundVariableError : Error {
  int variable;
  explicit UnboundVariableError(int variable_)
      : Error("unbound variable x" + std::to_string(variable_)),
        variable(variable_) {}
};

/// A configured budget would be exceeded; carries whatever partial count
/// was reached so callers can report honest infeasibility.
struct BudgetExceededError : Error {
  std::uint64_t partial;
  std::uint64_t limit;
  BudgetExceededError(const std::string& what_, std::uint64_t partial_,
                      std::uint64_t limit_)
      : Error(what_ + " (reached " + std::to_string(partial_) + ", limit " +
              std::to_string(limit_) + ")"),
        partial(partial_), limit(limit_) {}
};

/// An element pair does not describe an arrow between the given objects.
struct InconsistentArrowError : Error {
  using Error::Error;
};

/// Internal consistency failure: a quotient product did not factor through
/// the arrow equivalence. Indicates a bug, never a data error.
struct IllDefinedProductError : Error {
  using Error::Error;
};

}  // namespace fo2

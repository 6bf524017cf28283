#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordermono {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live on the same ground set (or simplex) do not.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (r outside its range,
/// empty domain, a set that is not increasing, a function of the wrong class).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A family of functions fails the multi-utility biconditional at (x, y).
class NotMultiUtility : public Error {
 public:
  NotMultiUtility(std::size_t x, std::size_t y)
      : Error("not a multi-utility: biconditional fails at pair (" +
              std::to_string(x) + ", " + std::to_string(y) + ")"),
        pair_(x, y) {}

  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

/// Linear constraint set with no probability vector in it.
class InfeasibleConstraint : public Error {
 public:
  using Error::Error;
};

/// Iterative search gave up before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A constructed witness failed its own exact re-check. Indicates a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordermono

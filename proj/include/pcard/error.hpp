#pragma once

#include <stdexcept>
#include <string>

namespace pcard {

/// Root of the toolkit's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's contract (bad arguments, unmet precondition).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive check would exceed the enumeration guard.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An object broke one of its declared invariants while being evaluated.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

/// A membership evaluator ran out of fuel; never read as "not a member".
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace pcard

#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Malformed input: unknown type tag, bad flag value, unparsable number.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold for the given
/// data (non-generic parameters, unassigned symbol, pole at a claimed regular
/// point, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invariant violation inside the library. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hecke

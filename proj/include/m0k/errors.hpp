#pragma once

#include <stdexcept>
#include <string>

namespace m0k {

/// Input data or arguments violate a documented precondition or invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested problem size exceeds the configured guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check the implementation relies on failed; indicates a bug
/// or a false modeling assumption, never bad user input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace m0k

#pragma once

#include <stdexcept>
#include <string>

namespace rootstack {

// Invalid input from a caller: bad key domain, malformed cache file,
// mismatched series truncations, a recursion evaluated outside its gate.
// The CLI maps this family to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A broken internal guarantee.  These indicate a bug (or a corrupted
// seeded cache), never bad user input.  The CLI maps them to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dependency cycle among invariants of equal degree.
class CycleError : public InternalError {
 public:
  using InternalError::InternalError;
};

// A same-degree dependency chain exceeded its proven length bound.
class DepthError : public InternalError {
 public:
  using InternalError::InternalError;
};

// Two writers disagreed about a memoised value.
class ConflictError : public InternalError {
 public:
  using InternalError::InternalError;
};

// A mathematical identity that must hold failed to hold (e.g. the
// coupling-constant derivation came out degenerate).  Exit code 1.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootstack

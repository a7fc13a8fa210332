#pragma once

#include <stdexcept>
#include <string>

namespace quadinc {

/// Bad caller input: duplicates, points off the variety, malformed files,
/// violated preconditions. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant did not hold on a computed result.
/// The CLI maps these to exit code 1.
class AuditFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quadinc

#pragma once

#include <stdexcept>
#include <string>

namespace lefcalc {

/// Raised when an input violates a documented precondition or type invariant.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (e.g. a chain map that
/// does not commute with the boundary). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lefcalc

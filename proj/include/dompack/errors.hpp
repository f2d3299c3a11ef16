#pragma once

#include <stdexcept>
#include <string>

namespace dompack {

/// An operation was called on input outside its domain (not a tree, not
/// bipartite, minimum degree too small, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 / JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search gave up. Distinct from a definite negative answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive procedure produced something that failed revalidation,
/// or did not converge within its iteration cap.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dompack

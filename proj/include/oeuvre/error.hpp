#pragma once

#include <stdexcept>
#include <string>

namespace oeuvre {

// Malformed or missing input (CLI exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Scenario 3 run still has undecided candidates (CLI exit status 3).
class PendingDecisionsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (CLI exit status 4).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace oeuvre

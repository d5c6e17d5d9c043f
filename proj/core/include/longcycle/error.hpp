#pragma once

#include <stdexcept>
#include <string>

namespace longcycle {

/// Raised when an argument lies outside an operation's domain
/// (vertex out of range, order above 64, k >= n, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The power iteration hit its iteration cap without meeting the
/// convergence criteria.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace longcycle

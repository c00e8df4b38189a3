#pragma once

#include <stdexcept>

namespace polya {

/// Malformed or inconsistent user input (bad permutation text, concentration
/// that does not match the set size, unknown group source, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine refused an instance that exceeds its size limits.
class GuardRailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed, e.g. the orbit sum is not divisible by |G|.
/// Only corrupt group input should be able to trigger this.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polya

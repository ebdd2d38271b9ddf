#pragma once

#include <stdexcept>

namespace sumdiv {

// Malformed or out-of-domain input (bad rational text, empty set, n = 0, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A pair cap, evaluation budget or memory budget would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proved inequality or structural identity failed on concrete data. This
// can only mean an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sumdiv

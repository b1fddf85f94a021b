#pragma once

#include <stdexcept>
#include <string>

namespace berkrh {

// Malformed or out-of-contract user input (bad prime, overlapping discs, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input that is well formed but degenerate for the requested operation
// (zero polynomial, constant map).
class DegenerateInput : public InputError {
 public:
  explicit DegenerateInput(const std::string& what) : InputError(what) {}
};

// An identity that must hold for valid data failed. Signals either wrong
// user-declared data (e.g. image center) or a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace berkrh

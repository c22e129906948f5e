#pragma once

#include <stdexcept>
#include <string>

namespace connective {

// Malformed or out-of-range input: bad indices, structures that fail their
// own axioms where the operation demands a valid one.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The instance is well formed but exceeds what the bitmask or enumeration
// limits allow.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// A documented precondition of the operation does not hold
// (e.g. an improper dynamics handed to the total category construction).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace connective

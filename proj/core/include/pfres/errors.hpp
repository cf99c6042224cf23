#pragma once

#include <stdexcept>
#include <string>

namespace pfres {

// Inputs that violate shape or compatibility rules (mismatched rings, bad sizes).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A well-formed request for a parameter combination the construction excludes.
class UnsupportedCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed a configured size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pfres

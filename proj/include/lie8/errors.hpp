#pragma once

#include <stdexcept>
#include <string>

namespace lie8 {

/// Bad caller input: dimension mismatch, unknown type, mixed root systems.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (roots, group elements, visited states) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal structural identity failed to hold.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The operation is not defined for this input (e.g. non-simply-laced type).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lie8

#pragma once

#include <stdexcept>
#include <string>

namespace wfatlas {

/// Domain error: invalid input or a request the mathematics does not allow.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two independent computations that must agree do not.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("internal consistency failure: " + what) {}
};

}  // namespace wfatlas

#pragma once

#include <stdexcept>
#include <string>

namespace grpbounds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when no admissible series of nilpotent normal subgroups and
/// partial complements exists (non-solvable input).
class NoSeries : public Error {
 public:
  using Error::Error;
};

}  // namespace grpbounds

#pragma once

#include <stdexcept>
#include <string>

namespace symmono {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A copy-count or size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Numerical breakdown: singular operand, asymmetry beyond tolerance, etc.
class NumericalError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

}  // namespace symmono

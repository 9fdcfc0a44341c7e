#pragma once

#include <stdexcept>
#include <string>

namespace trucksim {

// Bad input data (malformed files, inconsistent configs). CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime failure inside a simulation (operating point outside map range, etc.).
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace trucksim

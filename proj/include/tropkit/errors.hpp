#pragma once

#include <stdexcept>
#include <string>

namespace tropkit {

// Mathematically invalid request on well-formed input (CLI exit code 1).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropkit

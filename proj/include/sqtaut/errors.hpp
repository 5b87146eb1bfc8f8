#pragma once

#include <stdexcept>
#include <string>

namespace sqtaut {

/// Raised for malformed or out-of-contract arguments. The CLI maps it to exit 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is mathematically undefined for its argument
/// (e.g. inverting a series whose constant term is not 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sqtaut

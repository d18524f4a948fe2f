#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Mathematically undefined request (inverse of zero, zero polynomial, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller broke a precondition (mismatched fields, bad index, malformed input).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured budget or cap was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace plab

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgs {

// Bad input: wrong dimension, precondition violated, malformed data.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured search or closure limit was hit before completion.
class LimitExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

// An identity that must hold on valid input failed. Always a bug report.
class TheoremViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError("integer overflow in lattice arithmetic");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw DomainError("integer overflow in lattice arithmetic");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError("integer overflow in lattice arithmetic");
  return r;
}

} // namespace checked

} // namespace rgs

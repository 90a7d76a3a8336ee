#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twinsieve {

// Arithmetic would leave the 64-bit unsigned range.
class ArithmeticRangeError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

// Input outside the domain an operation is defined on (e.g. m not of the form 6n±1).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A computed certificate failed its own verification. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Requested work exceeds a fixed memory or time budget.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// No element satisfies the request (e.g. longest run of an empty set).
class EmptyInputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticRangeError(std::string(what) + ": multiplication overflow");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticRangeError(std::string(what) + ": addition overflow");
  return r;
}

// floor(sqrt(v)) exactly, for any 64-bit v.
inline std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrt(static_cast<double>(v)));
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > v)) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace detail
}  // namespace twinsieve

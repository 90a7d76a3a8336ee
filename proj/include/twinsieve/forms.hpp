#pragma once

// The three quadratic forms over indices n >= 1 and their witnesses.
//
// Index convention used throughout the library:
//   minus side  a_n = 6n - 1   (5, 11, 17, ...)
//   plus side   b_n = 6n + 1   (7, 13, 19, ...)
//
// With x, y >= 1:
//   6n - 1 is composite  <=>  n = 6xy + x - y          (PLUS_MINUS,  (6x-1)(6y+1))
//   6n + 1 is composite  <=>  n = 6xy - x - y          (MINUS_MINUS, (6x-1)(6y-1))
//                          or n = 6xy + x + y          (PLUS_PLUS,   (6x+1)(6y+1))

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "twinsieve/errors.hpp"

namespace twinsieve {

/// Index into the sequences 6n-1 / 6n+1. Valid indices satisfy 1 <= n <= kMaxIndex.
using Index = std::uint64_t;

/// Largest index whose plus-side value 6n+1 fits in 64 bits.
inline constexpr Index kMaxIndex = (std::numeric_limits<std::uint64_t>::max() - 1) / 6;

enum class ResidueSide { Minus, Plus };

enum class FormKind { PlusMinus, PlusPlus, MinusMinus };

constexpr ResidueSide side_of(FormKind kind) noexcept {
  return kind == FormKind::PlusMinus ? ResidueSide::Minus : ResidueSide::Plus;
}

constexpr std::string_view to_string(FormKind kind) noexcept {
  switch (kind) {
    case FormKind::PlusMinus: return "PLUS_MINUS";
    case FormKind::PlusPlus: return "PLUS_PLUS";
    case FormKind::MinusMinus: return "MINUS_MINUS";
  }
  return "?";
}

constexpr std::string_view to_string(ResidueSide side) noexcept {
  return side == ResidueSide::Minus ? "minus" : "plus";
}

inline std::optional<FormKind> parse_form_kind(std::string_view s) noexcept {
  if (s == "PLUS_MINUS") return FormKind::PlusMinus;
  if (s == "PLUS_PLUS") return FormKind::PlusPlus;
  if (s == "MINUS_MINUS") return FormKind::MinusMinus;
  return std::nullopt;
}

/// Certificate that n is representable by `kind` at (x, y).
struct FormWitness {
  FormKind kind;
  std::uint64_t x;
  std::uint64_t y;
  Index n;

  friend bool operator==(const FormWitness&, const FormWitness&) = default;
};

/// d1 * d2 == m with 1 < d1 <= d2 < m, both factors congruent to +-1 mod 6.
struct DivisorPair {
  std::uint64_t d1;
  std::uint64_t d2;
  std::uint64_t m;

  friend bool operator==(const DivisorPair&, const DivisorPair&) = default;
};

namespace detail {

inline void check_index(Index n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": index must be >= 1");
  if (n > kMaxIndex) throw ArithmeticRangeError(std::string(what) + ": 6n+1 exceeds 64 bits");
}

}  // namespace detail

/// The integer 6n-1 or 6n+1 addressed by (n, side).
inline std::uint64_t side_value(Index n, ResidueSide side) {
  detail::check_index(n, "side_value");
  return side == ResidueSide::Minus ? 6 * n - 1 : 6 * n + 1;
}

/// Evaluates the form at (x, y). Throws ArithmeticRangeError if 6xy + x + y overflows.
inline Index eval_form(FormKind kind, std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) throw DomainError("eval_form: x and y must be >= 1");
  const std::uint64_t six_xy = detail::checked_mul(detail::checked_mul(6, x, "eval_form"), y, "eval_form");
  const std::uint64_t upper = detail::checked_add(detail::checked_add(six_xy, x, "eval_form"), y, "eval_form");
  switch (kind) {
    case FormKind::PlusMinus: return six_xy + x - y;
    case FormKind::PlusPlus: return upper;
    case FormKind::MinusMinus: return six_xy - x - y;
  }
  throw DomainError("eval_form: unknown form");
}

/// Canonical PLUS_MINUS witness for n (smallest x), or nullopt iff 6n-1 is prime.
///
/// Any composite 6n-1 has a factor d <= sqrt(6n-1). If d = 6x-1 the witness has
/// small x and a forward scan finds the smallest such x. Otherwise every witness has
/// 6y+1 <= sqrt(6n-1), and x = (n+y)/(6y+1) shrinks as y grows, so scanning y
/// downwards yields the smallest x first.
inline std::optional<FormWitness> find_witness_minus_side(Index n) {
  detail::check_index(n, "find_witness_minus_side");
  const std::uint64_t root = detail::isqrt(6 * n - 1);
  for (std::uint64_t x = 1; 6 * x - 1 <= root; ++x) {
    const std::uint64_t step = 6 * x - 1;
    if (n > x && (n - x) % step == 0) return FormWitness{FormKind::PlusMinus, x, (n - x) / step, n};
  }
  if (root < 7) return std::nullopt;
  for (std::uint64_t y = (root - 1) / 6; y >= 1; --y) {
    const std::uint64_t step = 6 * y + 1;
    if ((n + y) % step == 0) return FormWitness{FormKind::PlusMinus, (n + y) / step, y, n};
  }
  return std::nullopt;
}

/// Canonical plus-side witness for n: MINUS_MINUS first, then PLUS_PLUS, each with
/// smallest x. Both forms are symmetric in (x, y), so the smallest x of any witness
/// has its factor below sqrt(6n+1).
inline std::optional<FormWitness> find_witness_plus_side(Index n) {
  detail::check_index(n, "find_witness_plus_side");
  const std::uint64_t root = detail::isqrt(6 * n + 1);
  for (std::uint64_t x = 1; 6 * x - 1 <= root; ++x) {
    const std::uint64_t step = 6 * x - 1;
    if ((n + x) % step == 0 && n + x >= step) return FormWitness{FormKind::MinusMinus, x, (n + x) / step, n};
  }
  for (std::uint64_t x = 1; 6 * x + 1 <= root; ++x) {
    const std::uint64_t step = 6 * x + 1;
    if (n > x && (n - x) % step == 0) return FormWitness{FormKind::PlusPlus, x, (n - x) / step, n};
  }
  return std::nullopt;
}

inline std::optional<FormWitness> find_witness(Index n, ResidueSide side) {
  return side == ResidueSide::Minus ? find_witness_minus_side(n) : find_witness_plus_side(n);
}

/// True iff (6n-1, 6n+1) is a twin prime pair.
inline bool is_twin_index(Index n) {
  return !find_witness_minus_side(n) && !find_witness_plus_side(n);
}

/// Factor pair certified by a witness. Throws ConsistencyError if the product check fails.
inline DivisorPair witness_to_divisors(const FormWitness& w) {
  if (w.x == 0 || w.y == 0) throw ConsistencyError("witness_to_divisors: x and y must be >= 1");
  if (eval_form(w.kind, w.x, w.y) != w.n) throw ConsistencyError("witness_to_divisors: witness does not evaluate to n");

  std::uint64_t a = 0;
  std::uint64_t b = 0;
  switch (w.kind) {
    case FormKind::PlusMinus:
      a = 6 * w.x - 1;
      b = detail::checked_add(detail::checked_mul(6, w.y, "witness_to_divisors"), 1, "witness_to_divisors");
      break;
    case FormKind::PlusPlus:
      a = 6 * w.x + 1;
      b = detail::checked_add(detail::checked_mul(6, w.y, "witness_to_divisors"), 1, "witness_to_divisors");
      break;
    case FormKind::MinusMinus:
      a = 6 * w.x - 1;
      b = detail::checked_mul(6, w.y, "witness_to_divisors") - 1;
      break;
  }
  if (a > b) std::swap(a, b);

  const std::uint64_t m = side_value(w.n, side_of(w.kind));
  std::uint64_t product;
  if (__builtin_mul_overflow(a, b, &product) || product != m || a <= 1 || b >= m)
    throw ConsistencyError("witness_to_divisors: divisor product does not reproduce 6n+-1");
  return DivisorPair{a, b, m};
}

}  // namespace twinsieve

#pragma once

// Classical ground truth: trial division, deterministic Miller-Rabin and a
// sieve of Eratosthenes. Nothing here touches the quadratic forms or the
// exclusion sieve; keep it that way so the cross-checks stay independent.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twinsieve/errors.hpp"

namespace twinsieve::oracle {

using u64 = std::uint64_t;

/// Largest m accepted by factorize().
inline constexpr u64 kFactorizeLimit = 1'000'000'000'000ull;

/// Memory ceiling for the Eratosthenes table (bytes).
inline constexpr u64 kSieveBudgetBytes = u64{1} << 30;

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a; m odd, m > a.
inline bool strong_probable_prime(u64 m, u64 a) {
  u64 d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, m);
  if (x == 1 || x == m - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, m);
    if (x == m - 1) return true;
  }
  return false;
}

inline constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Below this, trial division is used outright.
inline constexpr u64 kTrialDivisionThreshold = u64{1} << 32;

}  // namespace detail

/// Exact primality for every 64-bit m.
inline bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 p : detail::kSmallPrimes) {
    if (m == p) return true;
    if (m % p == 0) return false;
  }
  if (m < 41 * 41) return true;
  if (m < detail::kTrialDivisionThreshold) {
    for (u64 d = 41; d * d <= m; d += 2)
      if (m % d == 0) return false;
    return true;
  }
  // The first twelve primes are a deterministic base set for m < 3.3e24.
  for (u64 a : detail::kSmallPrimes)
    if (!detail::strong_probable_prime(m, a)) return false;
  return true;
}

/// Prime factors of m with multiplicity, ascending. Requires 2 <= m <= kFactorizeLimit.
inline std::vector<u64> factorize(u64 m) {
  if (m < 2) throw DomainError("factorize: m must be >= 2");
  if (m > kFactorizeLimit) throw ResourceError("factorize: m exceeds the trial-division range");
  std::vector<u64> factors;
  for (u64 p : {u64{2}, u64{3}}) {
    while (m % p == 0) {
      factors.push_back(p);
      m /= p;
    }
  }
  for (u64 d = 5; d * d <= m; d += 6) {
    for (u64 q : {d, d + 2}) {
      while (m % q == 0) {
        factors.push_back(q);
        m /= q;
      }
    }
  }
  if (m > 1) factors.push_back(m);
  return factors;
}

/// Odd-only sieve of Eratosthenes over [0, bound].
class PrimeTable {
public:
  explicit PrimeTable(u64 bound) : bound_(bound) {
    const u64 bits = bound / 2 + 1;
    if (bits / 8 > kSieveBudgetBytes) throw ResourceError("PrimeTable: bound exceeds the sieve memory budget");
    composite_.assign(bits / 64 + 1, 0);
    set(0);  // 1 is not prime
    for (u64 i = 3; i * i <= bound; i += 2) {
      if (test(i / 2)) continue;
      for (u64 j = i * i; j <= bound; j += 2 * i) set(j / 2);
    }
  }

  u64 bound() const noexcept { return bound_; }

  bool is_prime(u64 m) const {
    if (m > bound_) throw DomainError("PrimeTable: query above table bound");
    if (m == 2) return true;
    if (m < 2 || (m & 1) == 0) return false;
    return !test(m / 2);
  }

  /// All primes in [lo, hi] (hi clipped to the bound), ascending.
  std::vector<u64> primes_in(u64 lo, u64 hi) const {
    std::vector<u64> out;
    if (hi > bound_) hi = bound_;
    if (lo <= 2 && hi >= 2) out.push_back(2);
    for (u64 m = std::max<u64>(lo | 1, 3); m <= hi; m += 2)
      if (!test(m / 2)) out.push_back(m);
    return out;
  }

private:
  void set(u64 bit) { composite_[bit >> 6] |= u64{1} << (bit & 63); }
  bool test(u64 bit) const { return (composite_[bit >> 6] >> (bit & 63)) & 1; }

  u64 bound_;
  std::vector<u64> composite_;
};

/// Number of n in [1, limit] with 6n-1 and 6n+1 both prime, by Eratosthenes.
inline u64 twin_count(u64 limit) {
  if (limit == 0) throw DomainError("twin_count: limit must be >= 1");
  if (limit > (~u64{0} - 1) / 6) throw ArithmeticRangeError("twin_count: 6*limit+1 exceeds 64 bits");
  const PrimeTable table(6 * limit + 1);
  u64 count = 0;
  for (u64 n = 1; n <= limit; ++n)
    if (table.is_prime(6 * n - 1) && table.is_prime(6 * n + 1)) ++count;
  return count;
}

/// Twin indices n in [1, limit], ascending, by Eratosthenes.
inline std::vector<u64> twin_indices(u64 limit) {
  if (limit == 0) throw DomainError("twin_indices: limit must be >= 1");
  if (limit > (~u64{0} - 1) / 6) throw ArithmeticRangeError("twin_indices: 6*limit+1 exceeds 64 bits");
  const PrimeTable table(6 * limit + 1);
  std::vector<u64> out;
  for (u64 n = 1; n <= limit; ++n)
    if (table.is_prime(6 * n - 1) && table.is_prime(6 * n + 1)) out.push_back(n);
  return out;
}

struct Mismatch {
  u64 n;
  bool sieve_says_twin;
  bool oracle_says_twin;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct OracleReport {
  u64 limit = 0;
  u64 twin_count = 0;
  std::vector<Mismatch> mismatches;

  bool agrees() const noexcept { return mismatches.empty(); }
};

/// Compares a claimed ascending list of twin indices in [1, limit] against Eratosthenes.
inline OracleReport compare_twin_indices(u64 limit, std::span<const u64> claimed) {
  OracleReport report;
  report.limit = limit;
  const auto truth = twin_indices(limit);
  report.twin_count = truth.size();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < claimed.size() || j < truth.size()) {
    if (j == truth.size() || (i < claimed.size() && claimed[i] < truth[j])) {
      report.mismatches.push_back({claimed[i++], true, false});
    } else if (i == claimed.size() || truth[j] < claimed[i]) {
      report.mismatches.push_back({truth[j++], false, true});
    } else {
      ++i;
      ++j;
    }
  }
  return report;
}

}  // namespace twinsieve::oracle

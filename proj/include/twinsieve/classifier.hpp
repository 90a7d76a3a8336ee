#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twinsieve/errors.hpp"
#include "twinsieve/forms.hpp"
#include "twinsieve/oracle.hpp"

namespace twinsieve {

enum class Verdict { Prime, Composite };

constexpr std::string_view to_string(Verdict v) noexcept { return v == Verdict::Prime ? "Prime" : "Composite"; }

struct Classification {
  std::uint64_t m = 0;
  Verdict verdict = Verdict::Prime;
  std::optional<FormWitness> witness;
  std::optional<DivisorPair> divisors;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Counts of prime factors (with multiplicity) congruent to 5 and 1 mod 6.
struct ParitySignature {
  std::uint64_t m = 0;
  unsigned alpha = 0;
  unsigned beta = 0;

  friend bool operator==(const ParitySignature&, const ParitySignature&) = default;
};

/// (n, side) such that m = 6n-1 or 6n+1. Throws DomainError unless m >= 5 and m = +-1 mod 6.
inline std::pair<Index, ResidueSide> locate(std::uint64_t m) {
  if (m < 5 || (m % 6 != 1 && m % 6 != 5))
    throw DomainError("m = " + std::to_string(m) + " is outside the domain 6n-1 / 6n+1 with n >= 1");
  if (m % 6 == 5) return {m / 6 + 1, ResidueSide::Minus};
  return {m / 6, ResidueSide::Plus};
}

/// Primality of m decided by the form criterion alone, with a factor certificate when composite.
inline Classification classify(std::uint64_t m) {
  const auto [n, side] = locate(m);
  Classification c;
  c.m = m;
  c.witness = find_witness(n, side);
  if (c.witness) {
    c.verdict = Verdict::Composite;
    c.divisors = witness_to_divisors(*c.witness);
    if (c.divisors->m != m) throw ConsistencyError("classify: certificate is for a different integer");
  }
  return c;
}

inline ParitySignature parity_signature(std::uint64_t m) {
  locate(m);
  ParitySignature sig{m, 0, 0};
  for (auto p : oracle::factorize(m)) {
    if (p % 6 == 5) ++sig.alpha;
    else if (p % 6 == 1) ++sig.beta;
    else throw ConsistencyError("parity_signature: factor 2 or 3 in a 6n+-1 integer");
  }
  return sig;
}

struct ParityViolation {
  std::uint64_t m;
  unsigned alpha;
  unsigned beta;
};

struct ParityReport {
  Index limit = 0;
  std::uint64_t checked = 0;
  std::uint64_t odd_alpha = 0;   // candidates 6n-1
  std::uint64_t even_alpha = 0;  // candidates 6n+1
  std::vector<ParityViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks "alpha odd <=> m = 5 (mod 6)" for every 6n+-1 in [5, 6*limit+1].
inline ParityReport verify_parity_law(Index limit) {
  detail::check_index(limit, "verify_parity_law");
  if (6 * limit + 1 > oracle::kFactorizeLimit) throw ResourceError("verify_parity_law: range exceeds factorization budget");
  ParityReport report;
  report.limit = limit;
  for (Index n = 1; n <= limit; ++n) {
    for (std::uint64_t m : {6 * n - 1, 6 * n + 1}) {
      const auto sig = parity_signature(m);
      const bool odd = sig.alpha % 2 == 1;
      ++report.checked;
      (odd ? report.odd_alpha : report.even_alpha) += 1;
      if (odd != (m % 6 == 5)) report.violations.push_back({m, sig.alpha, sig.beta});
    }
  }
  return report;
}

struct MergedSequenceReport {
  Index limit = 0;
  std::uint64_t length = 0;        // 2 * limit
  std::uint64_t primes_checked = 0;
  bool passed = true;
  std::optional<std::string> first_discrepancy;
};

/// Interleaves 6n-1, 6n+1 for n = 1..limit and checks it is strictly increasing
/// and contains every prime in [5, 6*limit+1].
inline MergedSequenceReport merged_sequence_check(Index limit) {
  detail::check_index(limit, "merged_sequence_check");
  MergedSequenceReport report;
  report.limit = limit;

  std::vector<std::uint64_t> seq;
  seq.reserve(2 * limit);
  for (Index n = 1; n <= limit; ++n) {
    seq.push_back(side_value(n, ResidueSide::Minus));
    seq.push_back(side_value(n, ResidueSide::Plus));
  }
  report.length = seq.size();

  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] >= seq[i]) {
      report.passed = false;
      report.first_discrepancy = "not increasing at position " + std::to_string(i) + ": " + std::to_string(seq[i - 1]) +
                                 " >= " + std::to_string(seq[i]);
      return report;
    }
  }

  const oracle::PrimeTable table(6 * limit + 1);
  std::size_t j = 0;
  for (auto p : table.primes_in(5, 6 * limit + 1)) {
    ++report.primes_checked;
    while (j < seq.size() && seq[j] < p) ++j;
    if (j == seq.size() || seq[j] != p) {
      report.passed = false;
      report.first_discrepancy = "prime " + std::to_string(p) + " missing from the sequence";
      return report;
    }
  }
  return report;
}

}  // namespace twinsieve

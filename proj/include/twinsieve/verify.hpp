#pragma once

// Oracle comparisons behind `twinsieve verify` and the acceptance suite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinsieve/classifier.hpp"
#include "twinsieve/forms.hpp"
#include "twinsieve/oracle.hpp"
#include "twinsieve/sieve.hpp"

namespace twinsieve {

enum class VerifyScope { Twins, Classify, Parity, Merged };

inline constexpr VerifyScope kAllScopes[] = {VerifyScope::Twins, VerifyScope::Classify, VerifyScope::Parity,
                                             VerifyScope::Merged};

constexpr std::string_view to_string(VerifyScope s) noexcept {
  switch (s) {
    case VerifyScope::Twins: return "twins";
    case VerifyScope::Classify: return "classify";
    case VerifyScope::Parity: return "parity";
    case VerifyScope::Merged: return "merged";
  }
  return "?";
}

inline std::optional<VerifyScope> parse_scope(std::string_view s) noexcept {
  for (auto scope : kAllScopes)
    if (to_string(scope) == s) return scope;
  return std::nullopt;
}

struct ScopeResult {
  explicit ScopeResult(VerifyScope s) : scope(s) {}

  VerifyScope scope;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string detail;
  std::vector<std::string> samples;  // at most kMaxSamples

  static constexpr std::size_t kMaxSamples = 10;

  void record_mismatch(std::string what) {
    passed = false;
    ++mismatches;
    if (samples.size() < kMaxSamples) samples.push_back(std::move(what));
  }
};

/// Sieve twin indices against Eratosthenes, index by index.
inline ScopeResult verify_twins(const SieveConfig& config) {
  ScopeResult r{VerifyScope::Twins};
  std::vector<Index> claimed;
  for_each_twin(config, [&](const TwinPair& t) { claimed.push_back(t.n); });
  const auto report = oracle::compare_twin_indices(config.limit, claimed);
  r.checked = config.limit;
  for (const auto& m : report.mismatches)
    r.record_mismatch("n=" + std::to_string(m.n) + " sieve=" + (m.sieve_says_twin ? "twin" : "blocked") +
                      " oracle=" + (m.oracle_says_twin ? "twin" : "blocked"));
  r.detail = "sieve " + std::to_string(claimed.size()) + " vs oracle " + std::to_string(report.twin_count);
  return r;
}

/// classify(m) against the primality oracle for every 6n+-1 in [5, 6*limit+1],
/// including the divisor certificate of each composite verdict.
inline ScopeResult verify_classify(Index limit) {
  detail::check_index(limit, "verify_classify");
  ScopeResult r{VerifyScope::Classify};
  std::uint64_t composites = 0;
  for (Index n = 1; n <= limit; ++n) {
    for (std::uint64_t m : {6 * n - 1, 6 * n + 1}) {
      ++r.checked;
      const auto c = classify(m);
      const bool prime = oracle::is_prime(m);
      if ((c.verdict == Verdict::Prime) != prime) {
        r.record_mismatch("m=" + std::to_string(m) + " classify=" + std::string(to_string(c.verdict)));
        continue;
      }
      if (c.verdict == Verdict::Composite) {
        ++composites;
        const auto& d = *c.divisors;
        if (!(d.m == m && d.d1 > 1 && d.d2 > 1 && d.d1 < m && d.d2 < m && d.d1 * d.d2 == m))
          r.record_mismatch("m=" + std::to_string(m) + " bad certificate " + std::to_string(d.d1) + "x" +
                            std::to_string(d.d2));
      }
    }
  }
  r.detail = std::to_string(composites) + " composite certificates checked";
  return r;
}

inline ScopeResult verify_parity(Index limit) {
  ScopeResult r{VerifyScope::Parity};
  const auto report = verify_parity_law(limit);
  r.checked = report.checked;
  for (const auto& v : report.violations)
    r.record_mismatch("m=" + std::to_string(v.m) + " alpha=" + std::to_string(v.alpha) +
                      " beta=" + std::to_string(v.beta));
  r.detail = std::to_string(report.odd_alpha) + " odd-alpha, " + std::to_string(report.even_alpha) + " even-alpha";
  return r;
}

inline ScopeResult verify_merged(Index limit) {
  ScopeResult r{VerifyScope::Merged};
  const auto report = merged_sequence_check(limit);
  r.checked = report.length;
  if (!report.passed) r.record_mismatch(report.first_discrepancy.value_or("unknown"));
  r.detail = std::to_string(report.primes_checked) + " primes covered";
  return r;
}

inline ScopeResult run_scope(VerifyScope scope, const SieveConfig& config) {
  switch (scope) {
    case VerifyScope::Twins: return verify_twins(config);
    case VerifyScope::Classify: return verify_classify(config.limit);
    case VerifyScope::Parity: return verify_parity(config.limit);
    case VerifyScope::Merged: return verify_merged(config.limit);
  }
  throw DomainError("unknown verify scope");
}

}  // namespace twinsieve

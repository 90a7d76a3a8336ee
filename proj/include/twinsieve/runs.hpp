#pragma once

// Maximal runs of consecutive blocked indices. An index is blocked when at least
// one of 6n-1, 6n+1 is composite; a run is bounded by twin indices or by the
// range ends. A run ending exactly at the limit is marked truncated, since it
// may continue past the range.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinsieve/errors.hpp"
#include "twinsieve/forms.hpp"
#include "twinsieve/sieve.hpp"

namespace twinsieve {

struct RunSpan {
  Index start = 0;
  std::uint64_t length = 0;
  bool truncated = false;

  Index last() const noexcept { return start + length - 1; }
  friend bool operator==(const RunSpan&, const RunSpan&) = default;
};

struct RunReport {
  Index start = 0;
  std::uint64_t length = 0;
  bool truncated = false;
  std::vector<FormWitness> witnesses;  // witnesses[i].n == start + i

  RunSpan span() const noexcept { return {start, length, truncated}; }
};

using RunHistogram = std::map<std::uint64_t, std::uint64_t>;

/// Canonical witness blocking n: the minus-side witness if any, else the plus-side one.
inline std::optional<FormWitness> blocking_witness(Index n) {
  if (auto w = find_witness_minus_side(n)) return w;
  return find_witness_plus_side(n);
}

/// Run boundaries from the sieve bitmaps, stitched across segments in order.
inline std::vector<RunSpan> blocked_run_spans(const SieveConfig& config) {
  config.validate();
  std::vector<RunSpan> runs;
  std::optional<RunSpan> open;
  for_each_segment(config, [&](const SieveSegment& seg) {
    for (Index n = seg.lo; n < seg.hi; ++n) {
      if (seg.blocked(n)) {
        if (open) ++open->length;
        else open = RunSpan{n, 1, false};
      } else if (open) {
        runs.push_back(*open);
        open.reset();
      }
    }
  });
  if (open) {
    open->truncated = true;
    runs.push_back(*open);
  }
  return runs;
}

inline RunReport attach_witnesses(const RunSpan& span) {
  RunReport r{span.start, span.length, span.truncated, {}};
  r.witnesses.reserve(span.length);
  for (Index n = span.start; n <= span.last(); ++n) {
    auto w = blocking_witness(n);
    if (!w) throw ConsistencyError("blocked index " + std::to_string(n) + " has no witness");
    r.witnesses.push_back(*w);
  }
  return r;
}

inline std::vector<RunReport> blocked_runs(const SieveConfig& config) {
  std::vector<RunReport> out;
  for (const auto& s : blocked_run_spans(config)) out.push_back(attach_witnesses(s));
  return out;
}

inline std::vector<RunReport> blocked_runs(Index limit) { return blocked_runs(SieveConfig{limit}); }

/// Longest run up to the limit, ties broken by smallest start.
inline RunSpan longest_run_span(std::span<const RunSpan> runs) {
  if (runs.empty()) throw EmptyInputError("longest_run: no blocked index in range");
  RunSpan best = runs.front();
  for (const auto& r : runs)
    if (r.length > best.length) best = r;
  return best;
}

inline RunReport longest_run(const SieveConfig& config) {
  return attach_witnesses(longest_run_span(blocked_run_spans(config)));
}

inline RunReport longest_run(Index limit) { return longest_run(SieveConfig{limit}); }

inline RunHistogram run_length_histogram(std::span<const RunSpan> runs) {
  RunHistogram h;
  for (const auto& r : runs) ++h[r.length];
  return h;
}

inline RunHistogram run_length_histogram(const SieveConfig& config) {
  return run_length_histogram(blocked_run_spans(config));
}

inline RunHistogram run_length_histogram(Index limit) { return run_length_histogram(SieveConfig{limit}); }

}  // namespace twinsieve

#include <gtest/gtest.h>

#include "twinsieve/forms.hpp"
#include "twinsieve/runs.hpp"

using namespace twinsieve;

namespace {

std::vector<RunSpan> spans_of(const std::vector<RunReport>& runs) {
  std::vector<RunSpan> out;
  for (const auto& r : runs) out.push_back(r.span());
  return out;
}

// Runs computed index by index from the witness search, with no sieve involved.
std::vector<RunSpan> runs_by_witness_search(Index limit) {
  std::vector<RunSpan> out;
  for (Index n = 1; n <= limit; ++n) {
    if (is_twin_index(n)) continue;
    if (!out.empty() && out.back().last() + 1 == n) ++out.back().length;
    else out.push_back({n, 1, false});
  }
  if (!out.empty() && out.back().last() == limit) out.back().truncated = true;
  return out;
}

}  // namespace

TEST(BlockedRuns, Examples) {
  EXPECT_EQ(spans_of(blocked_runs(12)),
            (std::vector<RunSpan>{{4, 1, false}, {6, 1, false}, {8, 2, false}, {11, 1, false}}));
  EXPECT_TRUE(blocked_runs(3).empty());

  const auto sixteen = blocked_runs(16);
  ASSERT_FALSE(sixteen.empty());
  EXPECT_EQ(sixteen.back().span(), (RunSpan{13, 4, true}));
  EXPECT_EQ(spans_of(blocked_runs(17)).back(), (RunSpan{13, 4, false}));
}

TEST(BlockedRuns, WitnessesCoverEveryIndex) {
  for (const auto& run : blocked_runs(SieveConfig{5000, 97, 3})) {
    ASSERT_EQ(run.witnesses.size(), run.length);
    for (std::size_t i = 0; i < run.length; ++i) {
      const auto& w = run.witnesses[i];
      ASSERT_EQ(w.n, run.start + i);
      ASSERT_EQ(eval_form(w.kind, w.x, w.y), w.n);
    }
  }
}

TEST(BlockedRuns, PartitionAndMaximality) {
  constexpr Index kLimit = 20'000;
  const auto spans = blocked_run_spans(SieveConfig{kLimit, 333, 4});
  std::vector<int> covered(kLimit + 1, 0);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (i > 0) {
      ASSERT_GT(spans[i].start, spans[i - 1].last() + 1);  // neither adjacent nor overlapping
    }
    for (Index n = spans[i].start; n <= spans[i].last(); ++n) ++covered[n];
  }
  for (Index n = 1; n <= kLimit; ++n) ASSERT_EQ(covered[n] == 1, !is_twin_index(n)) << n;
}

TEST(BlockedRuns, SegmentationDoesNotSplitRuns) {
  const auto reference = runs_by_witness_search(3000);
  for (std::uint64_t seg : {1u, 2u, 7u, 64u, 3000u})
    ASSERT_EQ(blocked_run_spans(SieveConfig{3000, seg, 2}), reference) << seg;
}

TEST(LongestRun, Examples) {
  const auto r12 = longest_run(12);
  EXPECT_EQ(r12.span(), (RunSpan{8, 2, false}));
  EXPECT_EQ(r12.witnesses.size(), 2u);

  EXPECT_EQ(longest_run(16).span(), (RunSpan{13, 4, true}));
  EXPECT_THROW(longest_run(3), EmptyInputError);
}

TEST(LongestRun, MatchesWitnessSearchAndIsMonotone) {
  std::uint64_t previous = 0;
  for (Index limit : {4ull, 50ull, 500ull, 5000ull, 20'000ull}) {
    const auto by_search = longest_run_span(runs_by_witness_search(limit));
    const auto by_sieve = longest_run(limit);
    ASSERT_EQ(by_sieve.span(), by_search) << limit;
    ASSERT_GE(by_sieve.length, previous);
    previous = by_sieve.length;
  }
}

TEST(LongestRun, FrozenValueAt1e5) {
  // Recomputed independently by an Eratosthenes scan over n <= 1e5.
  EXPECT_EQ(longest_run(100'000).span(), (RunSpan{31'319, 153, false}));
}

TEST(RunHistogram, Examples) {
  EXPECT_EQ(run_length_histogram(12), (RunHistogram{{1, 3}, {2, 1}}));
  EXPECT_TRUE(run_length_histogram(3).empty());
  EXPECT_EQ(run_length_histogram(16), (RunHistogram{{1, 3}, {2, 1}, {4, 1}}));
}

TEST(RunHistogram, WeightedSumCountsBlockedIndices) {
  constexpr Index kLimit = 50'000;
  std::uint64_t weighted = 0;
  for (const auto& [len, count] : run_length_histogram(kLimit)) weighted += len * count;
  EXPECT_EQ(weighted, kLimit - count_twins({kLimit}));
}

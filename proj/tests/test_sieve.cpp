#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/brute_force.hpp"
#include "twinsieve/forms.hpp"
#include "twinsieve/oracle.hpp"
#include "twinsieve/sieve.hpp"

using namespace twinsieve;

namespace {

std::set<Index> set_bits(const SieveSegment& s, const Bitmap& b) {
  std::set<Index> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) out.insert(s.lo + i);
  return out;
}

std::vector<Index> indices_of(const std::vector<TwinPair>& pairs) {
  std::vector<Index> out;
  for (const auto& p : pairs) out.push_back(p.n);
  return out;
}

}  // namespace

TEST(SieveSegment, Examples) {
  const auto s = sieve_segment(1, 13);
  EXPECT_EQ(set_bits(s, s.blocked_minus), (std::set<Index>{6, 11}));
  // 67 = 6*11+1 is prime, so 11 is blocked only on the minus side (65 = 5*13).
  EXPECT_EQ(set_bits(s, s.blocked_plus), (std::set<Index>{4, 8, 9}));
  const twinsieve::testing::NaiveSieve naive(12);
  for (Index n = 1; n <= 12; ++n) {
    EXPECT_EQ(s.minus_blocked(n), naive.minus[n]) << n;
    EXPECT_EQ(s.plus_blocked(n), naive.plus[n]) << n;
  }

  const auto one = sieve_segment(1, 2);
  EXPECT_EQ(one.blocked_minus.count(), 0u);
  EXPECT_EQ(one.blocked_plus.count(), 0u);

  const auto four = sieve_segment(4, 5);
  EXPECT_EQ(four.blocked_minus.count(), 0u);
  EXPECT_EQ(set_bits(four, four.blocked_plus), (std::set<Index>{4}));
}

TEST(SieveSegment, RejectsBadRange) {
  EXPECT_THROW(sieve_segment(0, 5), DomainError);
  EXPECT_THROW(sieve_segment(5, 5), DomainError);
  EXPECT_THROW(sieve_segment(1, kMaxIndex + 2), ArithmeticRangeError);
  const SieveBase base(100);
  EXPECT_THROW(sieve_segment(50, 200, base), DomainError);
}

TEST(SieveSegment, MatchesLiteralExclusionSieve) {
  constexpr Index kLimit = 50'000;
  const twinsieve::testing::NaiveSieve naive(kLimit);
  const auto s = sieve_segment(1, kLimit + 1);
  for (Index n = 1; n <= kLimit; ++n) {
    ASSERT_EQ(s.minus_blocked(n), naive.minus[n]) << n;
    ASSERT_EQ(s.plus_blocked(n), naive.plus[n]) << n;
  }
}

TEST(SieveSegment, BaseRecursionBeyondSeed) {
  // max index 1e9 needs base bound ~12900 > seed bound, so the base itself is built recursively.
  const SieveBase base(1'000'000'000);
  for (Index s : base.minus_prime_indices()) ASSERT_TRUE(oracle::is_prime(6 * s - 1)) << s;
  for (Index s : base.plus_prime_indices()) ASSERT_TRUE(oracle::is_prime(6 * s + 1)) << s;
  const Index lo = 999'000'000;
  const auto seg = sieve_segment(lo, lo + 20'000, base);
  for (Index n = lo; n < lo + 20'000; ++n) {
    ASSERT_EQ(seg.minus_blocked(n), !oracle::is_prime(6 * n - 1)) << n;
    ASSERT_EQ(seg.plus_blocked(n), !oracle::is_prime(6 * n + 1)) << n;
  }
}

TEST(SieveSegment, PerBitMatchesWitnessSearchOnRandomSamples) {
  const Index limit = 1'000'000;
  const SieveBase base(limit);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> dist(1, limit - 256);
  for (int i = 0; i < 200; ++i) {
    const Index lo = dist(rng);
    const auto seg = sieve_segment(lo, lo + 256, base);
    for (Index n = lo; n < lo + 256; ++n) {
      ASSERT_EQ(seg.minus_blocked(n), find_witness_minus_side(n).has_value()) << n;
      ASSERT_EQ(seg.plus_blocked(n), find_witness_plus_side(n).has_value()) << n;
    }
  }
}

TEST(EnumerateTwins, Examples) {
  const auto twelve = enumerate_twins({12});
  EXPECT_EQ(indices_of(twelve), (std::vector<Index>{1, 2, 3, 5, 7, 10, 12}));
  EXPECT_EQ(twelve.back(), (TwinPair{12, 71, 73}));
  EXPECT_EQ(twelve[3], (TwinPair{5, 29, 31}));
  EXPECT_EQ(enumerate_twins({1}), (std::vector<TwinPair>{{1, 5, 7}}));
  EXPECT_EQ(indices_of(enumerate_twins({4})), (std::vector<Index>{1, 2, 3}));
}

TEST(EnumerateTwins, ConfigValidation) {
  EXPECT_THROW(enumerate_twins({0}), DomainError);
  EXPECT_THROW(enumerate_twins({10, 0}), DomainError);
  EXPECT_THROW(count_twins({kMaxIndex + 1}), ArithmeticRangeError);
}

TEST(EnumerateTwins, PairsArePrimeAndTwoApart) {
  for (const auto& t : enumerate_twins({20'000, 4096, 4})) {
    ASSERT_EQ(t.q, t.p + 2);
    ASSERT_EQ(t.p, 6 * t.n - 1);
    ASSERT_TRUE(oracle::is_prime(t.p) && oracle::is_prime(t.q));
  }
}

TEST(EnumerateTwins, SegmentAndThreadIndependence) {
  constexpr Index kLimit = 100'000;
  const auto reference = enumerate_twins({kLimit, kLimit, 1});
  for (std::uint64_t seg : {std::uint64_t{1}, std::uint64_t{7}, std::uint64_t{64}, std::uint64_t{1000}, kLimit})
    for (unsigned threads : {1u, 3u, 8u}) {
      ASSERT_EQ(enumerate_twins({kLimit, seg, threads}), reference) << "seg=" << seg << " threads=" << threads;
    }
}

TEST(EnumerateTwins, BitmapsIndependentOfSegmentation) {
  constexpr Index kLimit = 5000;
  const auto whole = sieve_segment(1, kLimit + 1);
  for (std::uint64_t seg : {1u, 7u, 64u, 1000u}) {
    for_each_segment({kLimit, seg, 2}, [&](const SieveSegment& s) {
      for (Index n = s.lo; n < s.hi; ++n) {
        ASSERT_EQ(s.minus_blocked(n), whole.minus_blocked(n));
        ASSERT_EQ(s.plus_blocked(n), whole.plus_blocked(n));
      }
    });
  }
}

TEST(CountTwins, Examples) {
  EXPECT_EQ(count_twins({12}), 7u);
  EXPECT_EQ(count_twins({1}), 1u);
  EXPECT_EQ(count_twins({10'000}), oracle::twin_count(10'000));
  EXPECT_EQ(count_twins({10'000}), 810u);
}

TEST(CountTwins, CountLawAndMonotonicity) {
  std::uint64_t previous = 0;
  for (Index limit : {1ull, 2ull, 10ull, 99ull, 1000ull, 4321ull, 65'536ull, 65'537ull, 1'000'000ull}) {
    const auto c = count_twins({limit, 1 << 14, 4});
    ASSERT_EQ(c, oracle::twin_count(limit)) << limit;
    ASSERT_GE(c, previous);
    previous = c;
  }
}

TEST(DigestTwins, DeterministicAcrossConfigurations) {
  const auto a = digest_twins({200'000, 1 << 20, 1});
  const auto b = digest_twins({200'000, 333, 8});
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.hash, b.hash);
  EXPECT_EQ(a.count, count_twins({200'000}));

  TwinDigest one;
  one.feed(1);
  EXPECT_EQ(digest_twins({1}).hash, one.hash);
}

TEST(EstimateMemory, GrowsWithThreads) {
  EXPECT_LT(estimate_sieve_memory({100'000'000, 1 << 20, 1}), estimate_sieve_memory({100'000'000, 1 << 20, 8}));
  EXPECT_LT(estimate_sieve_memory({100'000'000, 1 << 20, 8}), std::uint64_t{64} << 20);
}

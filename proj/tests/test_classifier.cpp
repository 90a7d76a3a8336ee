#include <gtest/gtest.h>

#include "support/brute_force.hpp"
#include "twinsieve/classifier.hpp"
#include "twinsieve/oracle.hpp"

using namespace twinsieve;

TEST(Classify, Examples) {
  const auto c25 = classify(25);
  EXPECT_EQ(c25.verdict, Verdict::Composite);
  EXPECT_EQ(c25.witness, (FormWitness{FormKind::MinusMinus, 1, 1, 4}));
  EXPECT_EQ(c25.divisors, (DivisorPair{5, 5, 25}));

  const auto c31 = classify(31);
  EXPECT_EQ(c31.verdict, Verdict::Prime);
  EXPECT_FALSE(c31.witness);
  EXPECT_FALSE(c31.divisors);

  const auto c35 = classify(35);
  EXPECT_EQ(c35.verdict, Verdict::Composite);
  EXPECT_EQ(c35.witness, (FormWitness{FormKind::PlusMinus, 1, 1, 6}));
  EXPECT_EQ(c35.divisors, (DivisorPair{5, 7, 35}));
}

TEST(Classify, DomainErrors) {
  for (std::uint64_t m : {0ull, 1ull, 2ull, 3ull, 4ull, 6ull, 8ull, 9ull, 10ull, 12ull, 1'000'002ull})
    EXPECT_THROW(classify(m), DomainError) << m;
  EXPECT_NO_THROW(classify(5));
  EXPECT_NO_THROW(classify(7));
}

TEST(Classify, Locate) {
  EXPECT_EQ(locate(5), (std::pair<Index, ResidueSide>{1, ResidueSide::Minus}));
  EXPECT_EQ(locate(7), (std::pair<Index, ResidueSide>{1, ResidueSide::Plus}));
  EXPECT_EQ(locate(18446744073709551611ull).first, kMaxIndex);  // 5 mod 6 near 2^64: no m+1 overflow
}

TEST(Classify, OracleAgreementAndCertificatesUpTo1e6) {
  for (std::uint64_t m = 5; m <= 1'000'000; m += 2) {
    if (m % 3 == 0) continue;
    const auto c = classify(m);
    ASSERT_EQ(c.verdict == Verdict::Prime, oracle::is_prime(m)) << m;
    ASSERT_EQ(c.witness.has_value(), c.verdict == Verdict::Composite);
    ASSERT_EQ(c.divisors.has_value(), c.verdict == Verdict::Composite);
    if (c.divisors) {
      ASSERT_EQ(c.divisors->m, m);
      ASSERT_EQ(c.divisors->d1 * c.divisors->d2, m);
      ASSERT_GT(c.divisors->d1, 1u);
      ASSERT_LT(c.divisors->d2, m);
    }
  }
}

TEST(ParitySignature, Examples) {
  EXPECT_EQ(parity_signature(35), (ParitySignature{35, 1, 1}));
  EXPECT_EQ(parity_signature(25), (ParitySignature{25, 2, 0}));
  EXPECT_EQ(parity_signature(49), (ParitySignature{49, 0, 2}));
  EXPECT_EQ(parity_signature(5), (ParitySignature{5, 1, 0}));
  EXPECT_EQ(parity_signature(7), (ParitySignature{7, 0, 1}));
  EXPECT_EQ(parity_signature(5 * 5 * 5 * 7 * 13), (ParitySignature{5 * 5 * 5 * 7 * 13, 3, 2}));
  EXPECT_THROW(parity_signature(9), DomainError);
}

TEST(ParityLaw, SmallRangeHasNoViolations) {
  const auto r = verify_parity_law(20);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 40u);
  EXPECT_EQ(r.odd_alpha, 20u);
  EXPECT_EQ(r.even_alpha, 20u);
}

TEST(ParityLaw, HoldsUpTo1e5) {
  const Index limit = (100'000 - 1) / 6;
  const auto r = verify_parity_law(limit);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 2 * limit);
}

TEST(MergedSequence, Examples) {
  const auto r3 = merged_sequence_check(3);
  EXPECT_TRUE(r3.passed);
  EXPECT_EQ(r3.length, 6u);
  EXPECT_EQ(r3.primes_checked, 6u);  // 5 7 11 13 17 19

  const auto r1 = merged_sequence_check(1);
  EXPECT_TRUE(r1.passed);
  EXPECT_EQ(r1.length, 2u);

  const auto r100 = merged_sequence_check(100);
  EXPECT_TRUE(r100.passed);
  EXPECT_FALSE(r100.first_discrepancy);
  // primes in [5, 601]: pi(601) - 2
  EXPECT_EQ(r100.primes_checked, 108u);
}

TEST(MergedSequence, RejectsZero) { EXPECT_THROW(merged_sequence_check(0), DomainError); }

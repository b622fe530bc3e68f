#include "crosscap/obstruction.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace crosscap {
namespace {

ObstructionVerdict verdict_of(const FamilySpec& spec) { return gc1_verdict(invariants_of(spec)); }

TEST(CableCandidates, Examples) {
  EXPECT_EQ(cable_candidates(0), (std::vector<std::int64_t>{1, -1}));
  EXPECT_EQ(cable_candidates(-2), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(cable_candidates(2), (std::vector<std::int64_t>{-3}));
  EXPECT_THROW(cable_candidates(1), std::invalid_argument);
  EXPECT_THROW(cable_candidates(-3), std::invalid_argument);
}

TEST(CableCandidates, SolveTheCableSignatureEquation) {
  for (std::int64_t sigma = -200; sigma <= 200; sigma += 2) {
    std::vector<std::int64_t> brute;
    for (std::int64_t q = -301; q <= 301; q += 2)
      if ((q > 0 ? 1 : -1) - q == sigma) brute.push_back(q);
    std::vector<std::int64_t> got = cable_candidates(sigma);
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, brute) << sigma;
  }
}

TEST(FoxMilnorDetTest, Examples) {
  EXPECT_EQ(fox_milnor_det_test(3, 3), BigInt(3));
  EXPECT_FALSE(fox_milnor_det_test(3, 7));
  EXPECT_FALSE(fox_milnor_det_test(3, 11));
}

TEST(FoxMilnorDetTest, Errors) {
  EXPECT_THROW(fox_milnor_det_test(2, 3), std::invalid_argument);
  EXPECT_THROW(fox_milnor_det_test(3, -3), std::invalid_argument);
  EXPECT_THROW(fox_milnor_det_test(0, 3), std::invalid_argument);
}

TEST(Gc1Verdict, Examples) {
  const ObstructionVerdict trefoil = verdict_of(FamilySpec::km1(1, 1));
  EXPECT_EQ(trefoil.status, VerdictStatus::NotObstructed);
  EXPECT_EQ(trefoil.witness, BigInt(3));

  const ObstructionVerdict km1 = verdict_of(FamilySpec::km1(1, 3));
  EXPECT_EQ(km1.status, VerdictStatus::Obstructed);
  ASSERT_EQ(km1.candidates.size(), 1u);
  EXPECT_EQ(km1.candidates[0].product, 33);

  const ObstructionVerdict k4_zero = verdict_of(FamilySpec::k4(0, 3));
  EXPECT_EQ(k4_zero.status, VerdictStatus::NotObstructed);
  EXPECT_EQ(k4_zero.witness, BigInt(3));
  EXPECT_EQ(k4_zero.candidates.size(), 2u);

  const ObstructionVerdict k4 = verdict_of(FamilySpec::k4(3, 1));
  EXPECT_EQ(k4.status, VerdictStatus::Obstructed);
  EXPECT_EQ(k4.candidates[0].q, -3);
  EXPECT_EQ(k4.candidates[0].product, 69);
  EXPECT_FALSE(k4.witness);
}

TEST(Gc1Verdict, Km1OutsideTheoremDomain) {
  for (std::int64_t n = -5; n <= 0; ++n) {
    const ObstructionVerdict v = verdict_of(FamilySpec::km1(n, 3));
    EXPECT_EQ(v.status, VerdictStatus::OutOfTheoremDomain);
    EXPECT_TRUE(v.candidates.empty());
  }
}

TEST(Gc1Verdict, CablesAreNeverObstructed) {
  for (std::int64_t q = -201; q <= 201; q += 2) {
    const ObstructionVerdict v = verdict_of(FamilySpec::cable2(q));
    ASSERT_EQ(v.status, VerdictStatus::NotObstructed) << q;
    ASSERT_EQ(v.witness, BigInt(q < 0 ? -q : q));
  }
}

TEST(TheoremCondition, Examples) {
  EXPECT_EQ(theorem_condition(FamilySpec::k4(2, 5)), true);
  EXPECT_EQ(theorem_condition(FamilySpec::km1(4, 3)), false);
  EXPECT_FALSE(theorem_condition(FamilySpec::cable2(7)));
  EXPECT_FALSE(theorem_condition(FamilySpec::km1(0, 3)));
  EXPECT_FALSE(theorem_condition(FamilySpec::k4neg(-2, -1)));
}

TEST(Gc1Verdict, EquivalentToLiteralTheoremOnGrids) {
  for (std::int64_t p = -19; p <= 19; p += 2) {
    for (std::int64_t n = -1000; n <= 1000; ++n) {
      const FamilySpec k4 = FamilySpec::k4(n, p);
      ASSERT_EQ(verdict_of(k4).status == VerdictStatus::NotObstructed, theorem_condition(k4).value())
          << describe(k4);
      if (n >= 1 && p != 1 && p != -1) {
        const FamilySpec km1 = FamilySpec::km1(n, p);
        ASSERT_EQ(verdict_of(km1).status == VerdictStatus::NotObstructed, theorem_condition(km1).value())
            << describe(km1);
      }
    }
  }
}

TEST(Gc1Verdict, CertificateShape) {
  for (Family f : {Family::K4, Family::K4Neg, Family::Km1}) {
    for (std::int64_t p = -15; p <= 15; p += 2) {
      for (std::int64_t n = -200; n <= 200; ++n) {
        const FamilySpec spec = FamilySpec::make(f, n, p);
        const KnotInvariants inv = invariants_of(spec);
        const ObstructionVerdict v = gc1_verdict(inv);
        bool some_root = false;
        for (const CableCandidate& c : v.candidates) {
          ASSERT_GT(c.product, 0);
          ASSERT_EQ(c.product % 2, 1);
          ASSERT_EQ(c.root.has_value(), oracle::is_odd_square(c.product));
          some_root |= c.root.has_value();
        }
        if (v.status != VerdictStatus::OutOfTheoremDomain)
          ASSERT_EQ(v.status == VerdictStatus::NotObstructed, some_root);
        if (v.witness) {
          bool matches = false;
          for (const CableCandidate& c : v.candidates) matches |= *v.witness * *v.witness == c.product;
          ASSERT_TRUE(matches);
        }
        if (v.status != VerdictStatus::OutOfTheoremDomain && inv.signature == 0 &&
            oracle::is_odd_square(inv.determinant))
          ASSERT_EQ(v.status, VerdictStatus::NotObstructed) << describe(spec);
      }
    }
  }
}

TEST(Gc1Verdict, TorusKnotsCarryWitness) {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    for (std::int64_t p : {1, -1}) {
      const ObstructionVerdict v = verdict_of(FamilySpec::km1(n, p));
      ASSERT_EQ(v.status, VerdictStatus::NotObstructed);
      ASSERT_EQ(v.witness, BigInt(2 * n + 1));
    }
  }
}

TEST(Classify, KnotSevenFour) {
  const Classification c = classify(FamilySpec::k4neg(-2, -1));
  EXPECT_EQ(c.invariants.determinant, 15);
  EXPECT_EQ(c.invariants.signature, -2);
  EXPECT_EQ(c.verdict.status, VerdictStatus::Obstructed);
  ASSERT_EQ(c.verdict.candidates.size(), 1u);
  EXPECT_EQ(c.verdict.candidates[0].q, 3);
  EXPECT_EQ(c.verdict.candidates[0].product, 45);
  EXPECT_EQ(c.invariants.gamma4_lower, 1);
  EXPECT_EQ(c.invariants.gamma4_upper, 1);
  EXPECT_EQ(c.gammac_lower, 2);
  EXPECT_EQ(c.gammac_upper, 3);
}

TEST(Classify, Km1ObstructedIsExactlyTwo) {
  const Classification c = classify(FamilySpec::km1(1, 3));
  EXPECT_EQ(c.verdict.status, VerdictStatus::Obstructed);
  EXPECT_EQ(c.gammac_lower, 2);
  EXPECT_EQ(c.gammac_upper, 2);
  EXPECT_EQ(c.invariants.gamma4_lower, 1);
  EXPECT_EQ(c.invariants.gamma4_upper, 1);
}

TEST(Classify, CableHasCrosscapOne) {
  const Classification c = classify(FamilySpec::cable2(7));
  EXPECT_EQ(c.invariants.gamma4_lower, 1);
  EXPECT_EQ(c.invariants.gamma4_upper, 1);
  EXPECT_EQ(c.gammac_lower, 1);
  EXPECT_EQ(c.gammac_upper, 1);
  const Classification unknot = classify(FamilySpec::cable2(-1));
  EXPECT_EQ(unknot.gammac_lower, 0);
  EXPECT_EQ(unknot.gammac_upper, 0);
}

TEST(Classify, BoundsAreConsistent) {
  auto check = [](const FamilySpec& spec) {
    const Classification c = classify(spec);
    const KnotInvariants& inv = c.invariants;
    ASSERT_LE(inv.gamma4_lower, inv.gamma4_upper) << describe(spec);
    ASSERT_LE(inv.gamma4_upper, c.gammac_upper) << describe(spec);
    ASSERT_LE(c.gammac_lower, c.gammac_upper) << describe(spec);
    ASSERT_GE(c.gammac_lower, inv.gamma4_lower) << describe(spec);
    if (c.verdict.status == VerdictStatus::Obstructed) ASSERT_GE(c.gammac_lower, 2);
    if (inv.pretzel) ASSERT_EQ(c.gammac_upper, crosscap_of_pretzel(*inv.pretzel));
  };
  for (Family f : {Family::K4, Family::K4Neg, Family::Km1})
    for (std::int64_t p = -19; p <= 19; p += 2)
      for (std::int64_t n = -100; n <= 100; ++n) check(FamilySpec::make(f, n, p));
  for (std::int64_t q = -99; q <= 99; q += 2) check(FamilySpec::cable2(q));
}

}  // namespace
}  // namespace crosscap

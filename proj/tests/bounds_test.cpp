#include <gtest/gtest.h>

#include <set>

#include "mpt/mpt.hpp"
#include "test_support.hpp"

namespace mpt {
namespace {

std::vector<Rational> rats(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(Lemma2Hypothesis, PlugIn) {
  const auto v = lemma2_hypothesis(rats({1, 1}), 2, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.lhs, 2);
  EXPECT_EQ(v.rhs, 1);
  EXPECT_EQ(v.margin, 1);
  EXPECT_FALSE(v.strict);
  const auto m = m_coefficients(rats({1, 1}), 2);
  EXPECT_GE(m.coeffs[1], m.coeffs[0]);
}

TEST(Lemma2Hypothesis, AllZeroFails) {
  const auto v = lemma2_hypothesis(rats({0, 0, 0}), 3, 1);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.rhs, 3);
}

TEST(Lemma2Hypothesis, AllFullHoldsAndPrefixVanishes) {
  const int r = 4;
  const int s = 5;
  const std::vector<Rational> g(s, Rational(r));
  const auto m = m_coefficients(g, r);
  for (int q = 1; q <= s; ++q) {
    EXPECT_TRUE(lemma2_hypothesis(g, r, q).holds);
    if (q < s) {
      EXPECT_EQ(m.coeffs[q - 1], 0);
    }
    EXPECT_GE(m.coeffs[q], m.coeffs[q - 1]);
  }
}

TEST(Lemma2Hypothesis, Errors) {
  EXPECT_THROW(lemma2_hypothesis(rats({1, 1}), 2, 0), Error);
  EXPECT_THROW(lemma2_hypothesis(rats({3}), 2, 1), Error);
}

TEST(Lemma2Hypothesis, ImpliesMonotonicity) {
  Rng rng(77);
  int tested = 0;
  for (int trial = 0; trial < 4000 && tested < 500; ++trial) {
    const int s = 1 + static_cast<int>(rng.below(12));
    const int r = 2 + static_cast<int>(rng.below(8));
    const int q = 1 + static_cast<int>(rng.below(s));
    std::vector<Rational> g;
    for (int i = 0; i < s; ++i) g.push_back(testing::random_weight(rng, r, 4));
    if (!lemma2_hypothesis(g, r, q).holds) continue;
    ++tested;
    const auto m = m_coefficients(g, r);
    ASSERT_GE(m.coeffs[q], m.coeffs[q - 1]) << "s=" << s << " r=" << r << " q=" << q;
  }
  EXPECT_GE(tested, 100);
}

TEST(Thm3Hypothesis, QZeroAlwaysHolds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_TRUE(thm3_hypothesis(generate_random(6, 3, seed), 0).holds);
}

TEST(Thm3Hypothesis, RegularEvenR) {
  // holds <=> q <= (c-2)/2 when delta = r(c-1)/2 and mu = 0.
  for (int c = 5; c <= 12; ++c)
    for (int r : {2, 4}) {
      const Tournament t = generate_regular(c, r);
      for (int q = 0; q < c; ++q) EXPECT_EQ(thm3_hypothesis(t, q).holds, 2 * q <= c - 2) << c << " " << r << " " << q;
    }
}

TEST(Thm3Hypothesis, Order13) {
  const auto v = thm3_hypothesis(generate_regular(13, 2), 2);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.out_of_range);
  EXPECT_EQ(v.lhs, 12);
  EXPECT_EQ(v.rhs, Rational(48, 11));
}

TEST(Thm3Hypothesis, OutOfRangeFlag) {
  EXPECT_TRUE(thm3_hypothesis(generate_regular(4, 2), 1).out_of_range);
  EXPECT_TRUE(thm3_hypothesis(generate_regular(5, 1), 1).out_of_range);
}

TEST(Thm3Bound, QZeroIsAmGmInstance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tournament t = generate_random(6, 3, seed);
    for (Vertex x = 0; x < t.order(); ++x) {
      const Rational bound = thm3_bound(t, x, 0);
      EXPECT_EQ(bound, ipow(Rational(t.in_degree(x), 5), 5));
      EXPECT_LE(Rational(t_q(t, x, 0, Direction::out)), bound);
    }
  }
}

TEST(Thm3Bound, FullRangeIsCompleteness) {
  const Tournament t = generate_random(7, 3, 9);
  for (Vertex x = 0; x < t.order(); ++x) {
    EXPECT_EQ(thm3_bound(t, x, 6, Direction::out), ipow(Rational(3), 6));
    EXPECT_EQ(thm3_bound(t, x, 6, Direction::in), ipow(Rational(3), 6));
  }
}

TEST(Thm3Bound, BalancedVertex) {
  const Tournament t = generate_regular(7, 4);
  for (int q = 0; q < 7; ++q) {
    BigInt binsum = 0;
    for (int k = 0; k <= q; ++k) binsum += binomial(6, k);
    EXPECT_EQ(thm3_bound(t, 0, q), ipow(Rational(2), 6) * Rational(binsum));
  }
}

TEST(Thm4Bound, RegularFormula) {
  const Tournament t = generate_regular(13, 2);
  const Thm4Result r = thm4_bound(t, 2);
  EXPECT_EQ(r.beta, 0);
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_EQ(*r.bound, Rational(660, 7));
  EXPECT_TRUE(r.beta_condition.holds);
  EXPECT_TRUE(r.beta_condition.strict);
}

TEST(Thm4Bound, SmallRegular) {
  const Tournament t = generate_regular(5, 2);
  const Thm4Result r = thm4_bound(t, 0);
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_EQ(*r.bound, Rational(4, 3));
  for (Vertex x = 0; x < t.order(); ++x)
    for (Direction d : {Direction::out, Direction::in}) EXPECT_LE(Rational(t_q(t, x, 0, d)), *r.bound);
}

TEST(Thm4Bound, AbsentWhenBetaConditionFails) {
  // c=5, q=1: need beta < 1/5; the layered instance is maximally irregular.
  const Tournament t = testing::layered(5, 2);
  const Thm4Result r = thm4_bound(t, 1);
  EXPECT_FALSE(r.beta_condition.holds);
  EXPECT_FALSE(r.bound.has_value());
  EXPECT_EQ(r.beta, 1);
}

TEST(Thm4Bound, BetaConditionMatchesDenominator) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Tournament t = generate_random(5 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 3), seed);
    for (int q = 0; q < t.parts(); ++q) {
      const Thm4Result r = thm4_bound(t, q);
      EXPECT_EQ(r.bound.has_value(), r.beta_condition.holds);
    }
  }
}

TEST(BoundReport, CarriesVerdicts) {
  const Tournament t = generate_regular(9, 2);
  const BoundReport rep = bound_report(t, 3, 2, Direction::in);
  EXPECT_EQ(rep.exact, t_q(t, 3, 2, Direction::in));
  EXPECT_TRUE(rep.thm3_satisfied);
  ASSERT_TRUE(rep.thm4_satisfied.has_value());
  EXPECT_TRUE(*rep.thm4_satisfied);
  ASSERT_EQ(rep.hypotheses.size(), 2U);
  EXPECT_EQ(rep.hypotheses[0].name, "thm3");
  EXPECT_EQ(rep.hypotheses[1].name, "thm4-beta");
}

TEST(FAlpha, FrozenValues) {
  EXPECT_EQ(f_alpha(1, 13), Rational(BigInt("872802734375"), BigInt("493682688")));
  EXPECT_EQ(f_alpha(Rational(1, 2), 17),
            Rational(BigInt("12323588138544921875"), BigInt("756463999909888")));
  EXPECT_LT(f_alpha(1, 13), 2048);
  EXPECT_GT(f_alpha(1, 14), 4096);
}

TEST(FAlpha, MonotoneInAlpha) {
  for (int c = 5; c <= 40; ++c) {
    Rational prev = f_alpha(0, c);
    for (int step = 1; step <= 12; ++step) {
      const Rational alpha(step, 4);
      Rational cur;
      try {
        cur = f_alpha(alpha, c);
      } catch (const Error&) {
        break;
      }
      EXPECT_LE(prev, cur) << "c=" << c << " alpha=" << to_string(alpha);
      prev = cur;
    }
  }
}

TEST(FAlpha, NonPositiveDenominator) {
  EXPECT_THROW(f_alpha(100, 13), Error);
  EXPECT_THROW(f_alpha(-1, 13), Error);
  EXPECT_THROW(f_alpha(1, 4), Error);
}

std::set<int> passing(const Rational& alpha, int from, int to) {
  std::set<int> out;
  for (const ThresholdRow& row : threshold_table(alpha, from, to)) {
    EXPECT_EQ(row.q, (row.c - 2) / 4);
    EXPECT_EQ(row.g, ipow(BigInt(2), static_cast<unsigned>(row.c - 2)));
    if (row.passes) out.insert(row.c);
  }
  return out;
}

TEST(ThresholdTable, PublishedSets) {
  const auto one = passing(1, 13, 22);
  for (int c : {13, 16, 19, 22}) EXPECT_TRUE(one.count(c)) << c;
  for (int c : {14, 15, 18}) EXPECT_FALSE(one.count(c)) << c;
  EXPECT_EQ(one, (std::set<int>{13, 16, 17, 19, 20, 21, 22}));

  const auto two = passing(2, 17, 26);
  for (int c : {17, 20, 23, 26}) EXPECT_TRUE(two.count(c)) << c;
  for (int c : {18, 19, 22}) EXPECT_FALSE(two.count(c)) << c;

  const auto three = passing(3, 21, 30);
  for (int c : {21, 24, 27, 30}) EXPECT_TRUE(three.count(c)) << c;
  for (int c : {22, 23, 26}) EXPECT_FALSE(three.count(c)) << c;
}

TEST(ThresholdTable, ExceptionListsMatchExactEvaluation) {
  for (const ExistenceCase& ec : existence_cases()) {
    const auto pass = passing(ec.alpha, ec.min_c, 80);
    for (int c = ec.min_c; c <= 80; ++c) {
      const bool excepted = std::find(ec.exceptions.begin(), ec.exceptions.end(), c) != ec.exceptions.end();
      EXPECT_EQ(pass.count(c) == 1, !excepted) << "case " << ec.label << " c=" << c;
    }
  }
}

TEST(ThresholdTable, InapplicableRows) {
  const auto rows = threshold_table(40, 5, 12);
  for (const ThresholdRow& row : rows) {
    EXPECT_FALSE(row.f_alpha.has_value());
    EXPECT_FALSE(row.passes);
  }
  EXPECT_THROW(threshold_table(1, 4, 10), Error);
  EXPECT_THROW(threshold_table(1, 10, 9), Error);
}

TEST(RatioCheck, GrowthOfTwoPowerIsSixteen) {
  for (int c = 5; c < 60; ++c) EXPECT_EQ(g_threshold(c + 4), 16 * g_threshold(c));
}

TEST(RatioCheck, SweepBelowSixteen) {
  EXPECT_TRUE(ratio_check(1, 13).ok);
  for (int alpha : {1, 2, 3})
    for (int c = 13; c <= 200; ++c) ASSERT_TRUE(ratio_check(alpha, c).ok) << alpha << " " << c;
  EXPECT_THROW(ratio_check(1, 12), Error);
}

TEST(Thm5Applicable, RegularOrder13) {
  const Thm5Report rep = thm5_applicable(generate_regular(13, 2));
  EXPECT_EQ(rep.q, 2);
  EXPECT_TRUE(rep.delta_hypothesis.holds);
  EXPECT_TRUE(rep.cases[0].applies);
  EXPECT_FALSE(rep.cases[1].applies);
  EXPECT_FALSE(rep.cases[2].applies);
  EXPECT_TRUE(rep.min_alpha_passes);
  EXPECT_TRUE(rep.guarantees_witness);
}

TEST(Thm5Applicable, ExceptedOrder14) {
  const Thm5Report rep = thm5_applicable(generate_regular(14, 2));
  EXPECT_TRUE(rep.cases[0].irregularity_ok);
  EXPECT_FALSE(rep.cases[0].order_ok);
  EXPECT_FALSE(rep.cases[0].applies);
  ASSERT_TRUE(rep.min_alpha_f.has_value());
  EXPECT_EQ(rep.min_alpha, 0);
  EXPECT_EQ(rep.min_alpha_passes, *rep.min_alpha_f < 4096);
}

TEST(Thm5Applicable, BelowAllThresholds) {
  const Thm5Report rep = thm5_applicable(generate_regular(12, 2));
  for (const CaseVerdict& cv : rep.cases) EXPECT_FALSE(cv.applies);
}

TEST(Pigeonhole, LayeredInstanceHasNoStrongTransversal) {
  for (int c = 3; c <= 7; ++c) {
    const Tournament t = testing::layered(c, 2);
    EXPECT_FALSE(exhaustive_search(t, moon_threshold(c)).found);
    EXPECT_GE(pigeonhole_sum(t, threshold_q(c)), transversal_count(t));
  }
}

}  // namespace
}  // namespace mpt

#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "papnlab/families.hpp"

using namespace papnlab;

TEST(Monomial, DirectTestMatchesDefinition) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto fld = make_field(n);
    for (std::uint64_t m = 1; m <= fld->order(); ++m) {
      const auto t = oracle::power_table(m, n, fld->modulus());
      EXPECT_EQ(monomial_0apn_direct(*fld, m).zero_apn, oracle::x0_apn(t, 0)) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Monomial, DirectTestMatchesRodierScanUpTo8) {
  for (unsigned n = 7; n <= 8; ++n) {
    const auto fld = make_field(n);
    for (std::uint64_t m = 1; m <= fld->order(); ++m)
      ASSERT_EQ(monomial_0apn_direct(*fld, m).zero_apn, is_x0_apn_rodier(from_power(fld, m), 0)) << n << " " << m;
  }
}

TEST(Monomial, VerdictIsConstantOnCyclotomicCosets) {
  for (unsigned n = 2; n <= 8; ++n) {
    const auto fld = make_field(n);
    for (std::uint64_t m = 1; m < fld->order(); ++m)
      ASSERT_EQ(monomial_0apn_direct(*fld, m).zero_apn,
                monomial_0apn_direct(*fld, (2 * m) % fld->order()).zero_apn)
          << n << " " << m;
  }
}

TEST(Monomial, MinimalPolynomialRouteAgreesWithDirectTest) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto fld = make_field(n);
    for (std::uint64_t m = 1; m <= fld->order(); ++m)
      ASSERT_EQ(monomial_0apn_minpoly(*fld, m), monomial_0apn_direct(*fld, m).zero_apn) << n << " " << m;
  }
}

TEST(Monomial, DefectPolynomialMatchesBinomialCoefficients) {
  for (std::uint64_t m = 1; m < 64; ++m) {
    const auto p = monomial_defect_poly(m);
    // (1+x)^m over GF(2) by repeated multiplication.
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < m; ++i) q ^= q << 1;
    const std::uint64_t h = q ^ 1 ^ (std::uint64_t{1} << m);
    EXPECT_EQ(p.to_mask(), h) << m;
  }
}

TEST(Monomial, AlternativeFormsAreReportedNotTrusted) {
  // The derived form must always match; the other two are allowed to diverge.
  std::size_t divergent = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto fld = make_field(n);
    for (std::uint64_t m = 1; m <= fld->order(); ++m) {
      const MinpolyForms f = monomial_minpoly_forms(*fld, m);
      EXPECT_EQ(f.derived, monomial_0apn_direct(*fld, m).zero_apn);
      divergent += (f.indexed != f.derived) + (f.composed != f.derived);
    }
  }
  EXPECT_GT(divergent, 0u);
}

TEST(Monomial, WitnessIsARealOffCurvePair) {
  const auto fld = make_field(6);
  for (std::uint64_t m = 1; m <= fld->order(); ++m) {
    const FamilyVerdict v = monomial_check(fld, m);
    EXPECT_TRUE(v.agrees());
    if (v.observed) continue;
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(is_zero_rodier_witness(from_power(fld, m), *v.witness));
    ASSERT_TRUE(v.constructed);
  }
}

TEST(PowerCriteria, GoldAndMersenneGcdRules) {
  for (unsigned n = 2; n <= 8; ++n) {
    const auto fld = make_field(n);
    for (unsigned d = 1; d <= 2 * n + 1; ++d) {
      EXPECT_TRUE(gold_power_check(fld, d).agrees()) << n << " " << d;
      EXPECT_TRUE(mersenne_power_check(fld, d).agrees()) << n << " " << d;
    }
  }
}

TEST(Grid, EveryMismatchIsDegenerateAndConstructionsVerify) {
  GridOptions opt;
  opt.n_max = 5;
  std::map<std::string, std::size_t> mismatches, predictions;
  std::size_t verdicts = 0;
  family_grid(opt, [&](const FamilyVerdict& v) {
    ++verdicts;
    if (v.predicted) ++predictions[v.family];
    if (v.constructed) EXPECT_FALSE(v.observed) << v.family;
    if (v.agrees()) return;
    ++mismatches[v.family];
    ASSERT_TRUE(v.nondegenerate.has_value()) << v.family << " n=" << v.n;
    EXPECT_FALSE(*v.nondegenerate) << v.family << " n=" << v.n;
  });
  EXPECT_GT(verdicts, 1000u);
  for (const char* fam : {"trace-f", "trace-g", "l1l2", "triple", "gold-trace"}) {
    EXPECT_EQ(mismatches[fam], 0u) << fam;
    EXPECT_GT(predictions[fam], 0u) << fam;
  }
}

TEST(Grid, ClassPredictionsCarryExplicitWitness) {
  for (unsigned n = 4; n <= 8; n += 2) {
    const auto fld = make_field(n);
    const auto id = LinearizedPoly::identity(n);
    const auto tr = LinearizedPoly::trace(n);
    for (const auto& v : {trace_class_check(fld, 2, TraceVariant::F, id), trace_class_check(fld, 2, TraceVariant::G, tr),
                          l1l2_class_check(fld, 2, 4, id, tr), triple_class_check(fld, 2, 2, tr, id)}) {
      EXPECT_EQ(v.predicted, std::optional<bool>(false)) << v.family;
      EXPECT_FALSE(v.observed) << v.family;
      EXPECT_TRUE(v.constructed) << v.family;
    }
  }
}

TEST(Binomial, NondegenerateCasesConstructWitness) {
  const auto fld = make_field(5);
  std::size_t built = 0;
  for (unsigned c = 2; c <= 5; ++c)
    for (unsigned d = 1; d < c; ++d)
      for (elem beta = 1; beta < 32; ++beta) {
        const auto v = binomial_case_check(fld, BinomialCase::GoldGold, c, d, beta);
        if (!v || !v->predicted || !*v->nondegenerate) continue;
        EXPECT_FALSE(v->observed);
        ASSERT_TRUE(v->constructed);
        ++built;
      }
  EXPECT_GT(built, 0u);
}

TEST(Binomial, ShapeParameters) {
  const auto p = binomial_case_params(BinomialCase::GoldMersenne, 3, 2, 5);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->a, 9u);
  EXPECT_EQ(p->b, 3u);
  EXPECT_FALSE(binomial_case_params(BinomialCase::MersenneGold, 2, 1, 5));  // 3 <= 3
  EXPECT_THROW(binomial_case_params(BinomialCase::GoldGold, 2, 2, 5), std::invalid_argument);
  EXPECT_THROW(binomial_check(make_field(4), 3, 5, 1), std::invalid_argument);
  EXPECT_THROW(binomial_check(make_field(4), 5, 3, 0), std::invalid_argument);
}

TEST(Binomial, InverseShapeOnlyAppliesToOddDegree) {
  EXPECT_FALSE(leander_rodier_check(make_field(4), 3, 1).predicted);
  const auto v = leander_rodier_check(make_field(5), 3, 1);
  EXPECT_TRUE(v.agrees());
}

TEST(TraceGeneral, RootConditionAlwaysGivesAWitness) {
  for (unsigned n = 2; n <= 7; ++n) {
    const auto fld = make_field(n);
    for (const auto& l : {LinearizedPoly::identity(n), LinearizedPoly::trace(n)})
      for (std::uint64_t m = 1; m < fld->order(); ++m) {
        const TraceGeneralVerdict t = trace_general_check(fld, m, l);
        if (n <= 4) {
          const VBF f = compose_linear(l, from_power(fld, m)) + trace_of(from_any_power(fld, 3));
          EXPECT_EQ(t.verdict.observed, oracle::x0_apn({f.table().begin(), f.table().end()}, 0));
        }
        if (!t.root_condition) continue;
        EXPECT_FALSE(t.verdict.observed) << "n=" << n << " m=" << m;
        EXPECT_TRUE(t.verdict.constructed) << "n=" << n << " m=" << m;
      }
  }
}

TEST(TraceGeneral, StatedConditionIsTrivialWhenSomeSquareIndexVanishes) {
  // At n = 6 the coset of 21 has 21^2 = 0 mod 63, so the condition holds for
  // every m, yet some of these functions are 0-APN.
  const auto fld = make_field(6);
  std::size_t zero_apn = 0;
  for (std::uint64_t m = 1; m < fld->order(); ++m) {
    const TraceGeneralVerdict t = trace_general_check(fld, m, LinearizedPoly::identity(6));
    EXPECT_TRUE(t.stated_condition);
    zero_apn += t.verdict.observed;
  }
  EXPECT_GT(zero_apn, 0u);
  // Where no square index vanishes the two conditions coincide.
  for (unsigned n : {5u, 7u}) {
    const auto f = make_field(n);
    for (std::uint64_t m = 1; m < f->order(); ++m)
      EXPECT_EQ(trace_general_stated_condition(*f, m), !monomial_0apn_direct(*f, m).zero_apn) << m;
  }
}

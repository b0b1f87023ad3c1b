#include <gtest/gtest.h>

#include "oracles.hpp"
#include "papnlab/random.hpp"
#include "papnlab/spectral.hpp"

using namespace papnlab;

namespace {

std::vector<oracle::u32> table_of(const VBF& f) { return {f.table().begin(), f.table().end()}; }

exact_int naive_moment(const std::vector<std::int64_t>& w, unsigned k) {
  exact_int s = 0;
  for (auto v : w) s += ipow(v, k);
  return s;
}

}  // namespace

TEST(Walsh, FastMatchesNaiveOnRandomFunctions) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto fld = make_field(n);
    Rng rng(100 + n);
    for (int trial = 0; trial < (n <= 3 ? 20 : 4); ++trial) {
      const VBF f = random_function(fld, rng);
      const WalshTable w = walsh_full(f);
      const auto ref = oracle::walsh(table_of(f), n, fld->modulus());
      for (elem b = 0; b < fld->size(); ++b)
        for (elem a = 0; a < fld->size(); ++a) ASSERT_EQ(w(a, b), ref[b * fld->size() + a]);
    }
  }
}

TEST(Walsh, ParallelEqualsSerial) {
  const auto fld = make_field(7);
  Rng rng(9);
  const VBF f = random_function(fld, rng);
  EXPECT_EQ(walsh_full(f, 1), walsh_full(f, 4));
  for (unsigned k = 2; k <= 4; ++k) EXPECT_EQ(moment_streaming(f, k, 1).value, moment_streaming(f, k, 3).value);
}

TEST(Walsh, ParsevalAndFixedValues) {
  const auto fld = make_field(6);
  Rng rng(1);
  const VBF f = random_function(fld, rng);
  const WalshTable w = walsh_full(f);
  for (elem b = 0; b < fld->size(); ++b) {
    std::int64_t s = 0;
    for (auto v : w.component(b)) s += std::int64_t{v} * v;
    EXPECT_EQ(s, std::int64_t{1} << 12);
  }
  EXPECT_EQ(w(0, 0), 64);
  for (elem a = 1; a < fld->size(); ++a) EXPECT_EQ(w(a, 0), 0);
}

TEST(Moments, MatchNaiveSumsAndStreaming) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto fld = make_field(n);
    Rng rng(n);
    const VBF f = random_function(fld, rng);
    const auto ref = oracle::walsh(table_of(f), n, fld->modulus());
    const WalshTable w = walsh_full(f);
    for (unsigned k = 2; k <= 4; ++k) {
      EXPECT_EQ(moment(w, k).value, naive_moment(ref, k));
      EXPECT_EQ(moment_streaming(f, k).value, naive_moment(ref, k));
    }
  }
  EXPECT_THROW(moment(walsh_full(from_power(make_field(3), 3)), 5), std::invalid_argument);
  EXPECT_THROW(moment(walsh_full(from_power(make_field(3), 3)), 1), std::invalid_argument);
}

TEST(Moments, FourthMomentEqualsScaledDdtSquares) {
  for (unsigned n = 3; n <= 7; ++n) {
    const auto fld = make_field(n);
    const VBF f = from_power(fld, 3);
    const auto d = oracle::ddt(table_of(f));
    exact_int sq = 0;
    for (auto v : d) sq += exact_int{v} * v;
    EXPECT_EQ(moment_streaming(f, 4).value, pow2(2 * n) * sq);
  }
}

TEST(Moments, TwistedMatchesNaive) {
  const unsigned n = 3;
  const auto fld = make_field(n);
  Rng rng(77);
  const VBF f = random_function(fld, rng);
  const auto ref = oracle::walsh(table_of(f), n, fld->modulus());
  const WalshTable w = walsh_full(f);
  for (elem x0 = 0; x0 < 8; ++x0)
    for (elem y0 = 0; y0 < 8; ++y0)
      for (unsigned k = 2; k <= 3; ++k) {
        exact_int s = 0;
        for (elem b = 0; b < 8; ++b)
          for (elem a = 0; a < 8; ++a) {
            const auto sign = oracle::trace(oracle::mul(a, x0, n, fld->modulus()) ^ oracle::mul(b, y0, n, fld->modulus()),
                                            n, fld->modulus());
            s += ipow(ref[b * 8 + a], k) * (sign ? -1 : 1);
          }
        EXPECT_EQ(twisted_moment(w, k, x0, y0).value, s);
      }
}

TEST(Walsh, ModificationDifferenceHoldsAndDetectsWrongTables) {
  const auto fld = make_field(4);
  Rng rng(5);
  const VBF f = random_function(fld, rng);
  for (elem x0 = 0; x0 < 16; ++x0)
    for (elem eps = 1; eps < 16; ++eps) ASSERT_TRUE(verify_walsh_diff(f, x0, eps));
  // A table modified at a different point must be rejected.
  EXPECT_FALSE(verify_walsh_diff(f, modify_at(f, 3, 1), 2, 1));
}

TEST(Walsh, FactorsTakeDocumentedValues) {
  const auto fld = make_field(4);
  const Field& f = *fld;
  for (elem b = 0; b < 16; ++b)
    for (elem eps = 1; eps < 16; ++eps) {
      const int d = d_factor(f, b, eps);
      EXPECT_TRUE(d == 0 || d == 2);
      const int e = e_factor(f, 3, b, 5, 7, eps);
      EXPECT_TRUE(e == 0 || e == 2 || e == -2);
    }
  EXPECT_THROW(d_factor(f, 1, 0), std::invalid_argument);
}

TEST(Exact, DecimalRoundTrip) {
  for (exact_int v : {exact_int{0}, exact_int{-1}, pow2(100), -pow2(90) + 12345}) EXPECT_EQ(from_decimal(to_decimal(v)), v);
  EXPECT_EQ(to_decimal(pow2(64)), "18446744073709551616");
}

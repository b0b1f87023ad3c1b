#include <gtest/gtest.h>

#include "oracles.hpp"
#include "papnlab/differential.hpp"
#include "papnlab/random.hpp"

using namespace papnlab;

namespace {

std::vector<oracle::u32> table_of(const VBF& f) { return {f.table().begin(), f.table().end()}; }

}  // namespace

TEST(DDT, MatchesNaiveCounts) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto fld = make_field(n);
    Rng rng(n * 31);
    for (int trial = 0; trial < 5; ++trial) {
      const VBF f = random_function(fld, rng);
      const DDTable d = ddt(f, 2);
      const auto ref = oracle::ddt(table_of(f));
      for (elem a = 0; a < f.size(); ++a)
        for (elem b = 0; b < f.size(); ++b) ASSERT_EQ(d(a, b), ref[a * f.size() + b]);
      if (n >= 2) EXPECT_EQ(differential_uniformity(f, 3), oracle::uniformity(table_of(f)));
    }
  }
}

TEST(DDT, RowsSumToFieldSize) {
  const auto fld = make_field(6);
  Rng rng(2);
  const VBF f = random_function(fld, rng);
  const DDTable d = ddt(f);
  for (elem a = 0; a < f.size(); ++a) {
    std::uint64_t s = 0;
    for (auto v : d.row(a)) {
      s += v;
      EXPECT_EQ(v % 2, 0u);
    }
    EXPECT_EQ(s, f.size());
  }
  EXPECT_EQ(d(0, 0), f.size());
}

TEST(Spectrum, KnownPowerMaps) {
  // Gold map on GF(2^5): every nonzero row has 16 twos.
  const auto s = spectrum(from_power(make_field(5), 3));
  EXPECT_EQ(s.at(2), 31u * 16);
  EXPECT_EQ(s.at(0), 31u * 16);
  EXPECT_EQ(s.size(), 2u);
  // Inverse on GF(2^4): one 4 per row.
  const auto inv = spectrum(from_power(make_field(4), 14));
  EXPECT_EQ(inv.at(4), 15u);
  EXPECT_EQ(spectrum(from_power(make_field(6), 27), 4), spectrum(from_power(make_field(6), 27), 1));
}

TEST(Apn, KnownClassifications) {
  for (unsigned n = 2; n <= 9; ++n) {
    const auto fld = make_field(n);
    EXPECT_TRUE(is_apn(from_power(fld, 3))) << n;
    EXPECT_EQ(is_apn(from_power(fld, fld->order() - 1)), n % 2 == 1) << n;
  }
  EXPECT_EQ(differential_uniformity(from_power(make_field(6), 27)), 12u);
  EXPECT_FALSE(is_apn(from_power(make_field(4), 5)));
}

TEST(PartialApn, BothTestsMatchDefinitionOnRandomFunctions) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto fld = make_field(n);
    Rng rng(1000 + n);
    for (int trial = 0; trial < 300; ++trial) {
      const VBF f = random_function(fld, rng);
      for (elem x0 = 0; x0 < f.size(); ++x0) {
        const bool ref = oracle::x0_apn(table_of(f), x0);
        ASSERT_EQ(is_x0_apn_derivative(f, x0), ref);
        ASSERT_EQ(is_x0_apn_rodier(f, x0), ref);
      }
    }
  }
}

TEST(PartialApn, WitnessesAreValidAndLexicographicallyFirst) {
  const auto fld = make_field(4);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const VBF f = random_function(fld, rng);
    const auto t = f.table();
    for (elem x0 = 0; x0 < 16; ++x0) {
      const auto d = find_derivative_violation(t, x0);
      const auto r = find_rodier_violation(t, x0);
      ASSERT_EQ(d.has_value(), r.has_value());
      if (!d) continue;
      EXPECT_NE(d->a, 0u);
      EXPECT_NE(d->x, x0);
      EXPECT_NE(d->x, x0 ^ d->a);
      EXPECT_EQ(t[d->x ^ d->a] ^ t[d->x], t[x0 ^ d->a] ^ t[x0]);
      EXPECT_LT(r->u, r->v);
      EXPECT_NE(r->u, x0);
      EXPECT_NE(r->v, x0);
      EXPECT_EQ(t[x0] ^ t[r->u] ^ t[r->v] ^ t[x0 ^ r->u ^ r->v], 0u);
      // No smaller off-curve pair exists.
      for (elem u = 0; u <= r->u; ++u)
        for (elem v = u + 1; v < 16; ++v) {
          if (u == r->u && v >= r->v) break;
          if (u == x0 || v == x0) continue;
          EXPECT_NE(t[x0] ^ t[u] ^ t[v] ^ t[x0 ^ u ^ v], 0u);
        }
    }
  }
}

TEST(PartialApn, SetReportListsEveryFailure) {
  const VBF f = from_power(make_field(6), 27);
  const PapnReport r = papn_set(f, 3);
  EXPECT_EQ(r.verdict[0], 1);
  EXPECT_FALSE(r.all());
  EXPECT_FALSE(r.none());
  for (const auto& fail : r.failures) EXPECT_EQ(r.verdict[fail.x0], 0);
  std::size_t ones = 0;
  for (auto v : r.verdict) ones += v;
  EXPECT_EQ(ones + r.failures.size(), 64u);
  EXPECT_TRUE(papn_set(from_power(make_field(5), 3)).all());
}

TEST(WeaklyApn, MatchesMinimumImageSize) {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto fld = make_field(n);
    Rng rng(n);
    for (int trial = 0; trial < 30; ++trial) {
      const VBF f = random_function(fld, rng);
      EXPECT_EQ(is_weakly_apn(f), oracle::min_derivative_image(table_of(f)) >= (f.size() >> 2) + 1);
    }
  }
  EXPECT_THROW(is_weakly_apn(from_power(make_field(1), 1)), std::invalid_argument);
}

TEST(QuadrupleSets, SizesMatchDefinitions) {
  const auto fld = make_field(3);
  Rng rng(8);
  const VBF f = random_function(fld, rng);
  const auto t = f.table();
  for (elem x = 0; x < 8; ++x)
    for (elem y = 0; y < 8; ++y) {
      std::uint64_t s = 0, tt = 0;
      for (elem u = 0; u < 8; ++u) {
        s += (t[u] ^ t[u ^ x] ^ y) == 0;
        for (elem v = 0; v < 8; ++v)
          tt += ((u ^ x) && (v ^ x) && (u ^ v)) && (t[u] ^ t[v] ^ t[u ^ v ^ x] ^ y) == 0;
      }
      EXPECT_EQ(s_size(f, x, y), s);
      EXPECT_EQ(t_size(f, x, y), tt);
    }
}

#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta3/construct.hpp"
#include "zeta3/error.hpp"
#include "zeta3/spectra.hpp"

using namespace zeta3;
using zeta3::testing::q2_base;

namespace {

std::vector<ComplexDescription> test_complexes() {
  std::vector<ComplexDescription> out{q2_base()};
  for (auto& cx : zeta3::testing::q2_covers(2)) out.push_back(std::move(cx));
  out.push_back(base_quotient(zeta3::testing::q3_presentation()));
  return out;
}

std::size_t total(const Classification& c) {
  std::size_t n = c.unclassified.size();
  for (const auto& b : c.buckets) n += b.count;
  return n;
}

}  // namespace

TEST(Spectra, TrivialFactors) {
  EXPECT_EQ(trivial_factor(SpectralOperator::E, 2), (IntegerPolynomial{1, 0, 0, -64}));
  EXPECT_EQ(trivial_factor(SpectralOperator::B, 2), (IntegerPolynomial{1, 0, 0, 8}));
  EXPECT_EQ(trivial_factor(SpectralOperator::A, 2),
            IntegerPolynomial({1, 0, 0, -1}) * IntegerPolynomial({1, 0, 0, -8}) * IntegerPolynomial({1, 0, 0, -64}));
}

TEST(Spectra, ClassifyCubeRootsForB) {
  const Classification c = classify(IntegerPolynomial{1, 0, 0, -1}, 2, SpectralOperator::B);
  EXPECT_FALSE(c.trivial_removed_exactly);
  EXPECT_EQ(c.count("q^0"), 3u);
  EXPECT_TRUE(c.unclassified.empty());
}

TEST(Spectra, PlantedZeroFailsTheHeckeCriterion) {
  const IntegerPolynomial p = trivial_factor(SpectralOperator::A, 2) * IntegerPolynomial{1, -4};
  const Classification c = classify(p, 2, SpectralOperator::A);
  EXPECT_TRUE(c.trivial_removed_exactly);
  EXPECT_FALSE(c.ramanujan());
  EXPECT_EQ(c.unclassified.size(), 1u);
  EXPECT_NEAR(std::abs(c.unclassified[0]), 0.25, 1e-9);
  // A zero at modulus q^-1 is allowed.
  EXPECT_TRUE(classify(trivial_factor(SpectralOperator::A, 2) * IntegerPolynomial{1, -2}, 2, SpectralOperator::A)
                  .ramanujan());
}

TEST(Spectra, BaseComplexBuckets) {
  const SpectralReport r = spectral_report(zeta_parts(q2_base()));
  EXPECT_EQ(r.a.degree, 9u);
  EXPECT_EQ(r.a.nontrivial_count(), 0u);
  EXPECT_EQ(r.a.count("q^0", true) + r.a.count("q^-1", true) + r.a.count("q^-2", true), 9u);
  EXPECT_GE(r.e.count("q^-2", true), 3u);
  EXPECT_EQ(r.b.count("q^0"), 6u);
  EXPECT_TRUE(r.verdicts.agree());
  EXPECT_TRUE(r.verdicts.ramanujan());
  EXPECT_EQ(r.census.a, 0);
  EXPECT_EQ(r.census.b, 3);
  EXPECT_EQ(r.census.c, 6);
  EXPECT_EQ(r.census.d, 0);
  EXPECT_EQ(r.census.e, 18);
  EXPECT_TRUE(r.census.consistent);
}

TEST(Spectra, PropertiesOnEveryTestComplex) {
  for (const auto& cx : test_complexes()) {
    const ZetaParts parts = zeta_parts(cx);
    const SpectralReport r = spectral_report(parts);
    const ComplexCounts& c = parts.counts;
    for (const auto* cl : {&r.a, &r.e, &r.b}) EXPECT_EQ(total(*cl), cl->degree);
    EXPECT_TRUE(r.verdicts.agree());
    EXPECT_TRUE(r.steinberg.divides);
    EXPECT_GE(r.steinberg.order, static_cast<unsigned>(c.chi - 1));
    EXPECT_EQ(r.b.count("q^0"), static_cast<std::size_t>(3 * (c.chi - 1)));
    EXPECT_TRUE(r.census.consistent);
    EXPECT_EQ(r.census.b, 3);
    EXPECT_EQ(r.census.c, 3 * c.n0 - 3 * c.n1 + 3 * c.n2 - 3);
    EXPECT_EQ(6 * r.census.a + r.census.b + r.census.c + 3 * r.census.d + 3 * r.census.e, 3 * c.n2);
    EXPECT_EQ(3 * r.census.a + r.census.b + 2 * r.census.d + r.census.e, c.n1);
    EXPECT_EQ(r.census.a + r.census.b + r.census.d, c.n0);
    EXPECT_TRUE(r.rank.pe_full_rank);
    EXPECT_TRUE(r.rank.pb_full_rank);
    EXPECT_EQ(r.q34_zeros, 0u);
  }
}

TEST(Spectra, SteinbergDivisibility) {
  const ZetaParts parts = zeta_parts(q2_base());
  const SteinbergCheck s = steinberg_divisibility(parts.pb, 3);
  EXPECT_TRUE(s.divides);
  EXPECT_EQ(s.order, 2u);
  EXPECT_TRUE(steinberg_divisibility(IntegerPolynomial{1, 1}, 1).divides);
  EXPECT_FALSE(steinberg_divisibility(IntegerPolynomial{1, 1}, 2).divides);
  EXPECT_THROW(steinberg_divisibility(parts.pb, 0), Error);
}

TEST(Spectra, ConflictingVerdictsAreReported) {
  ZetaParts parts = zeta_parts(q2_base());
  parts.pa *= IntegerPolynomial{1, -4};
  const SpectralReport r = spectral_report(parts);
  EXPECT_FALSE(r.verdicts.hecke);
  EXPECT_TRUE(r.verdicts.edge);
  EXPECT_FALSE(r.verdicts.agree());
}

TEST(Spectra, ModulusClassesAreDistinctPerOperator) {
  for (auto op : {SpectralOperator::A, SpectralOperator::E, SpectralOperator::B}) {
    const auto classes = modulus_classes(op);
    std::size_t trivial = 0;
    for (const auto& c : classes) trivial += c.trivial;
    EXPECT_GE(trivial, 1u);
  }
}

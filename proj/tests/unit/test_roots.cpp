#include <cmath>

#include <gtest/gtest.h>

#include "zeta3/roots.hpp"

using namespace zeta3;

TEST(Roots, CubeRootsOfUnity) {
  const auto m = zero_moduli(IntegerPolynomial{1, 0, 0, -1});
  ASSERT_EQ(m.size(), 3u);
  for (double x : m) EXPECT_NEAR(x, 1.0, 1e-12);
}

TEST(Roots, Linear) {
  const auto m = zero_moduli(IntegerPolynomial{1, -4});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_NEAR(m[0], 0.25, 1e-15);
}

TEST(Roots, RepeatedFactorsKeepMultiplicity) {
  const IntegerPolynomial p = IntegerPolynomial{1, 0, -2}.pow(3) * IntegerPolynomial{1, 0, 0, 8}.pow(2);
  const auto zeros = polynomial_zeros(p);
  unsigned total = 0;
  for (const auto& z : zeros) total += z.multiplicity;
  EXPECT_EQ(total, 12u);
  const auto m = zero_moduli(p);
  ASSERT_EQ(m.size(), 12u);
  // Ascending: six zeros of modulus 1/2, then six of modulus 1/sqrt 2.
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(m[i], 0.5, 1e-12);
  for (std::size_t i = 6; i < 12; ++i) EXPECT_NEAR(m[i], std::sqrt(0.5), 1e-12);
}

TEST(Roots, ResidualsAreSmall) {
  const IntegerPolynomial p{1, -3, 7, 0, -5, 2, 11};
  for (const auto& z : polynomial_zeros(p)) {
    std::complex<long double> acc = 0;
    const std::complex<long double> x(z.value.real(), z.value.imag());
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
      acc = acc * x + static_cast<long double>(p.coefficients()[i].convert_to<long long>());
    }
    EXPECT_LT(std::abs(acc), 1e-8L);
  }
}

TEST(Roots, HighDegreeClusteredModuli) {
  // (1 - 16 u^4)^5 (1 - 2 u^2)^7: zeros of modulus 1/2 and 2^-1/2.
  const IntegerPolynomial p = IntegerPolynomial{1, 0, 0, 0, -16}.pow(5) * IntegerPolynomial{1, 0, -2}.pow(7);
  const auto m = zero_moduli(p, RootOptions{1e-9, 800});
  ASSERT_EQ(m.size(), 34u);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(m[i], 0.5, 1e-9);
  for (std::size_t i = 20; i < 34; ++i) EXPECT_NEAR(m[i], std::sqrt(0.5), 1e-9);
}

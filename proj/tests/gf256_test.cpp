#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "rsreal/gf256.hpp"
#include "rsreal/oracle.hpp"

using namespace rsreal;

namespace {

GfElement el(int v) { return GfElement{static_cast<std::uint8_t>(v)}; }

TEST(Gf256, TableMultiplyMatchesNaiveOnAllPairs) {
  const auto& table = gf_mul_table();
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; ++b) {
      const auto want = oracle::naive_gf_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
      ASSERT_EQ(gf_mul(el(a), el(b)).value(), want) << a << " * " << b;
      ASSERT_EQ(table[a][b], want) << a << " * " << b;
    }
  }
}

TEST(Gf256, KnownProducts) {
  EXPECT_EQ(gf_mul(el(2), el(128)).value(), 29);
  EXPECT_EQ(gf_mul(el(2), el(142)).value(), 1);
  EXPECT_EQ(gf_inv(el(2)).value(), 142);
  EXPECT_EQ(gf_add(el(243), el(125)).value(), 142);
  EXPECT_EQ(gf_mul(el(0), el(77)).value(), 0);
  EXPECT_EQ(alpha_pow(8).value(), 29);
}

TEST(Gf256, ExpTableHasPeriod255) {
  const auto& t = gf_tables();
  std::array<bool, 256> seen{};
  for (int i = 0; i < 255; ++i) {
    const int v = t.exp[i];
    ASSERT_NE(v, 0);
    ASSERT_FALSE(seen[v]) << "alpha^" << i << " repeats";
    seen[v] = true;
    ASSERT_EQ(t.log[v], i);
    ASSERT_EQ(t.exp[i + 255], t.exp[i]);
  }
  EXPECT_EQ(alpha_pow(255).value(), 1);
  EXPECT_EQ(alpha_pow(0).value(), 1);
}

TEST(Gf256, FieldAxiomsExhaustive) {
  for (int a = 0; a < 256; ++a) {
    EXPECT_EQ(gf_add(el(a), el(a)).value(), 0);
    EXPECT_EQ(gf_mul(el(a), el(1)).value(), a);
    if (a != 0) {
      EXPECT_EQ(gf_mul(el(a), gf_inv(el(a))).value(), 1);
    }
    for (int b = 0; b < 256; ++b) {
      ASSERT_EQ(gf_mul(el(a), el(b)), gf_mul(el(b), el(a)));
      ASSERT_EQ(gf_add(el(a), el(b)), gf_add(el(b), el(a)));
    }
  }
  // Associativity and distributivity on a strided cube keeps this fast.
  for (int a = 0; a < 256; a += 3) {
    for (int b = 1; b < 256; b += 5) {
      for (int c = 2; c < 256; c += 7) {
        ASSERT_EQ((el(a) * el(b)) * el(c), el(a) * (el(b) * el(c)));
        ASSERT_EQ(el(a) * (el(b) + el(c)), el(a) * el(b) + el(a) * el(c));
      }
    }
  }
}

TEST(Gf256, DivisionByZeroThrows) {
  EXPECT_THROW(gf_div(el(5), el(0)), std::domain_error);
  EXPECT_THROW(gf_inv(el(0)), std::domain_error);
  EXPECT_EQ(gf_div(el(0), el(9)).value(), 0);
}

TEST(Gf256, PowerReducesExponent) {
  EXPECT_EQ(gf_pow(el(0), 0).value(), 1);
  EXPECT_EQ(gf_pow(el(0), 5).value(), 0);
  EXPECT_EQ(gf_pow(el(2), 256), el(2));
  EXPECT_EQ(gf_pow(el(3), 255).value(), 1);
}

TEST(Gf256, BitmatrixOnesOfOneIsEight) {
  EXPECT_EQ(bitmatrix_ones(el(1)), 8);
  EXPECT_EQ(bitmatrix_ones(el(0)), 0);
}

TEST(GfPolynomial, TrimsAndReportsDegree) {
  EXPECT_EQ(GfPolynomial({}).degree(), -1);
  EXPECT_TRUE(GfPolynomial({0, 0}).is_zero());
  EXPECT_EQ(GfPolynomial({1, 2, 0}).degree(), 1);
  EXPECT_EQ(GfPolynomial({5}).eval(el(200)).value(), 5);
}

TEST(GfPolynomial, ProductOfLinearFactors) {
  // (x + 1)(x + 2) = x^2 + 3x + 2
  EXPECT_EQ(poly_mul(GfPolynomial({1, 1}), GfPolynomial({2, 1})), GfPolynomial({2, 3, 1}));
  EXPECT_EQ(poly_add(GfPolynomial({1, 2, 3}), GfPolynomial({1, 2, 3})), GfPolynomial{});
}

TEST(GfPolynomial, ModMatchesWorkedRemainder) {
  // (48 + 6x + 112x^2 + 70x^3) x^3 mod (x^3 + 7x^2 + 14x + 8)
  const GfPolynomial a({0, 0, 0, 48, 6, 112, 70});
  const GfPolynomial g({8, 14, 7, 1});
  EXPECT_EQ(poly_mod(a, g), GfPolynomial({243, 125, 142}));
}

TEST(GfPolynomial, ModRejectsBadDivisor) {
  EXPECT_THROW(poly_mod(GfPolynomial({1, 2}), GfPolynomial{}), std::invalid_argument);
  EXPECT_THROW(poly_mod(GfPolynomial({1, 2}), GfPolynomial({1, 3})), std::invalid_argument);
}

TEST(GfPolynomial, DivisionIdentityOnRandomInputs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GfElement> gc(len(rng) % 6 + 1);
    for (auto& c : gc) c = el(byte(rng));
    gc.push_back(el(1));
    const GfPolynomial g(gc);
    std::vector<GfElement> qc(len(rng));
    std::vector<GfElement> rc(g.degree());
    for (auto& c : qc) c = el(byte(rng));
    for (auto& c : rc) c = el(byte(rng));
    const GfPolynomial q(qc), r(rc);
    EXPECT_EQ(poly_mod(poly_add(poly_mul(q, g), r), g), r);
  }
}

}  // namespace

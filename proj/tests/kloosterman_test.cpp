#include "kmoments/kloosterman.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

using namespace kmoments;

namespace {

// Independent of the field tables: schoolbook product and inverse by search.
Element slow_mul(Element x, Element y, Polynomial m) { return clmul_mod(x, y, m); }

Element slow_inv(Element x, Polynomial m, std::uint32_t q) {
  for (Element y = 1; y < q; ++y)
    if (slow_mul(x, y, m) == 1) return y;
  ADD_FAILURE() << "no inverse";
  return 0;
}

int slow_trace(Element x, Polynomial m, unsigned r) {
  Element s = 0;
  for (unsigned i = 0; i < r; ++i) {
    s ^= x;
    x = slow_mul(x, x, m);
  }
  return static_cast<int>(s);
}

int slow_kloosterman(unsigned r, Polynomial m, Element a) {
  const std::uint32_t q = 1u << r;
  int sum = 0;
  for (Element x = 1; x < q; ++x) sum += slow_trace(x ^ slow_mul(a, slow_inv(x, m, q), m), m, r) ? -1 : 1;
  return sum;
}

}  // namespace

TEST(Kloosterman, GoldenValuesQ8) {
  const auto f = Field::build(3);
  EXPECT_EQ(kloosterman_sum(f, 1), -5);
  EXPECT_EQ(kloosterman_sum(f, 3), 3);
  EXPECT_EQ(kloosterman_sum(f, 4), kloosterman_sum(f, 2));
  const auto t = kloosterman_table(f);
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(t.multiset(), (std::vector<int>{-5, -1, -1, -1, 3, 3, 3}));
  EXPECT_EQ(t.raw(), (std::vector<int>{0, -5, -1, 3, -1, 3, -1, 3}));
  EXPECT_THROW(kloosterman_sum(f, 0), std::domain_error);
  EXPECT_THROW(t.at(0), std::out_of_range);
}

TEST(Kloosterman, GoldenValuesQ16) {
  // Direct summation over x^4 + x + 1.
  const auto t = kloosterman_table(Field::build(4));
  EXPECT_EQ(t.raw(), (std::vector<int>{0, -1, -1, -1, -1, -1, 7, 7, 3, -5, 3, -5, 3, -5, -5, 3}));
}

TEST(Kloosterman, TableMatchesSlowSummation) {
  for (unsigned r = 1; r <= 7; ++r) {
    const auto f = Field::build(r);
    const auto t = kloosterman_table(f);
    for (Element a = 1; a < f.size(); ++a) ASSERT_EQ(t.at(a), slow_kloosterman(r, f.modulus(), a)) << r << ' ' << a;
  }
}

TEST(Kloosterman, BruteForceMoments) {
  const auto f = Field::build(3);
  EXPECT_EQ(moment_bruteforce(f, 0), 7);
  EXPECT_EQ(moment_bruteforce(f, 2), 55);
  EXPECT_EQ(moment_bruteforce(f, 3), -47);
  EXPECT_EQ(moments_bruteforce(kloosterman_table(f), 4), (std::vector<BigInt>{7, 1, 55, -47, 871}));
  EXPECT_EQ(moments_bruteforce(kloosterman_table(Field::build(4)), 4), (std::vector<BigInt>{15, 1, 239, 289, 7631}));
}

TEST(Kloosterman, LowMomentsFromOrthogonality) {
  for (unsigned r = 1; r <= 12; ++r) {
    const auto f = Field::build(r);
    const auto mk = moments_bruteforce(kloosterman_table(f), 2);
    EXPECT_EQ(mk[0], f.size() - 1);
    EXPECT_EQ(mk[1], 1) << r;
    // Second moment: q^2 - q - 1.
    EXPECT_EQ(mk[2], BigInt(f.size()) * f.size() - f.size() - 1) << r;
  }
}

TEST(Kloosterman, MomentsNeedBigIntegers) {
  const auto f = Field::build(10);
  const auto table = kloosterman_table(f);
  const BigInt mk32 = moment_bruteforce(table, 32);
  EXPECT_GT(mk32, BigInt(1) << 128);
  EXPECT_EQ(moments_bruteforce(table, 32).back(), mk32);
}

TEST(Kloosterman, SanityBounds) {
  for (unsigned r = 2; r <= 10; ++r) {
    const auto f = Field::build(r);
    const auto t = kloosterman_table(f);
    const double bound = 2.0 * std::sqrt(static_cast<double>(f.size()));
    for (Element a = 1; a < f.size(); ++a) {
      const int k = t.at(a);
      EXPECT_EQ(((k % 4) + 4) % 4, 3) << r << ' ' << a;
      EXPECT_LE(std::abs(k), bound);
      EXPECT_EQ(t.at(f.square(a)), k);
    }
  }
  // GF(2): the only sum is lambda(1 + 1) = 1.
  EXPECT_EQ(kloosterman_table(Field::build(1)).raw(), (std::vector<int>{0, 1}));
}

TEST(Kloosterman, ExponentialSumExamples) {
  const auto f = Field::build(3);
  EXPECT_EQ(expsum_theta_side(f, 1), -6);
  EXPECT_EQ(expsum_theta_side(f, 3), 2);
  EXPECT_EQ(expsum_coset_side(f, 1, 1), 4);
  EXPECT_EQ(expsum_coset_side(f, 3, 1), -4);
  EXPECT_THROW(expsum_theta_side(f, 0), std::domain_error);
  EXPECT_THROW(expsum_coset_side(f, 0, 1), std::domain_error);
  EXPECT_THROW(expsum_coset_side(f, 1, 2), std::domain_error);
}

TEST(Kloosterman, ExponentialSumsMatchKloosterman) {
  for (unsigned r = 1; r <= 6; ++r) {
    const auto f = Field::build(r);
    const auto t = kloosterman_table(f);
    for (Element a = 1; a < f.size(); ++a) {
      ASSERT_EQ(expsum_theta_side(f, a), t.at(a) - 1);
      for (Element b = 0; b < f.size(); ++b)
        if (f.trace(b) == 1) ASSERT_EQ(expsum_coset_side(f, a, b), -t.at(a) - 1);
    }
  }
}

TEST(Kloosterman, MultisetIndependentOfModulus) {
  for (unsigned r = 2; r <= 7; ++r) {
    const auto moduli = irreducible_polynomials(r);
    const auto reference = kloosterman_table(Field::build(r, moduli.front())).multiset();
    for (Polynomial m : moduli) EXPECT_EQ(kloosterman_table(Field::build(r, m)).multiset(), reference) << r << ' ' << m;
  }
}

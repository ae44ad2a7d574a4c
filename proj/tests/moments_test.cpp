#include "kmoments/moments.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "kmoments/kloosterman.hpp"

using namespace kmoments;

namespace {

// Number of partitions of {1..h} into exactly t nonempty blocks, by
// assigning each element to an existing block or a new one.
long long count_partitions(unsigned h, unsigned t) {
  std::function<long long(unsigned, unsigned)> rec = [&](unsigned placed, unsigned blocks) -> long long {
    if (placed == h) return blocks == t ? 1 : 0;
    long long n = blocks * rec(placed + 1, blocks);
    if (blocks < t) n += rec(placed + 1, blocks + 1);
    return n;
  };
  return rec(0, 0);
}

std::vector<int> hamming_weights(const Field& f, Code c) {
  std::vector<int> w;
  for (Element a = 1; a < f.size(); ++a) w.push_back(static_cast<int>(dual_codeword(f, c, a).weight()));
  return w;
}

}  // namespace

TEST(Stirling, Examples) {
  for (unsigned h = 1; h <= 20; ++h) EXPECT_EQ(stirling2(h, 1), 1);
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(2, 3), 0);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  EXPECT_EQ(stirling2_explicit(3, 2), 3);
}

TEST(Stirling, RecurrenceMatchesPartitionCount) {
  for (unsigned h = 0; h <= 9; ++h)
    for (unsigned t = 0; t <= h + 1; ++t) EXPECT_EQ(stirling2(h, t), count_partitions(h, t)) << h << ' ' << t;
}

TEST(Stirling, RecurrenceMatchesAlternatingSum) {
  for (unsigned h = 0; h <= 30; ++h) {
    const auto row = stirling2_row(h);
    for (unsigned t = 0; t <= h; ++t) ASSERT_EQ(row[t], stirling2_explicit(h, t)) << h << ' ' << t;
  }
}

TEST(Binomial, ZeroConvention) {
  EXPECT_EQ(binom(5, 7), 0);
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(6, 5), 6);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(-3, 0), 0);
  EXPECT_EQ(binom(100, 50), BigInt("100891344545564193334812497256"));
  for (long long n = 0; n <= 40; ++n)
    for (long long k = 1; k <= n; ++k) ASSERT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST(Pless, Examples) {
  const auto f = Field::build(3);
  for (Code c : kAllCodes) {
    const auto h0 = pless_check(f, c, 0);
    EXPECT_EQ(h0.lhs, 8);
    EXPECT_EQ(h0.rhs, 8);
    EXPECT_TRUE(h0.equal);
  }
  const auto c1 = pless_check(f, Code::c1, 1);
  EXPECT_EQ(c1.lhs, 24);
  EXPECT_EQ(c1.rhs, 24);
  // sum over K of (q+1+K)/4 for K in {-5, -1 x3, 3 x3} = 1 + 6 + 9.
  const auto c4 = pless_check(f, Code::c4, 1);
  EXPECT_EQ(c4.lhs, 16);
  EXPECT_EQ(c4.rhs, 16);
  EXPECT_THROW(pless_check(Field::build(2), Code::c1, 1), std::domain_error);
}

TEST(Pless, HoldsForAllCodes) {
  for (unsigned r = 3; r <= 6; ++r) {
    const auto f = Field::build(r);
    for (Code c : kAllCodes) {
      const auto w = hamming_weights(f, c);
      const auto dist = weight_distribution(f, c, std::min<std::size_t>(code_length(f, c), 10));
      for (unsigned h = 0; h <= 10; ++h) {
        const auto chk = pless_check(f, c, h, w, dist);
        EXPECT_TRUE(chk.rhs_integral);
        EXPECT_TRUE(chk.equal) << r << ' ' << code_number(c) << ' ' << h << ": " << chk.lhs << " vs " << chk.rhs;
      }
    }
  }
}

TEST(Recursion, HandEvaluatedSteps) {
  const auto f = Field::build(3);
  const std::vector<BigInt> lower{7};
  EXPECT_EQ(moment_recursive(f, Code::c1, 1, lower, weight_distribution(f, Code::c1, 1)), 1);
  EXPECT_EQ(moment_recursive(f, Code::c3, 1, lower, weight_distribution(f, Code::c3, 1)), 1);
  const std::vector<BigInt> two{7, 1};
  for (Code c : kAllCodes)
    EXPECT_EQ(moment_recursive(f, c, 2, two, weight_distribution(f, c, std::min<std::size_t>(2, code_length(f, c)))),
              55);
}

TEST(Recursion, SequenceExamples) {
  const auto f3 = Field::build(3);
  for (Code c : kAllCodes) EXPECT_EQ(moment_sequence(f3, c, 3).mk, (std::vector<BigInt>{7, 1, 55, -47}));
  const auto s = moment_sequence(Field::build(4), Code::c3, 1);
  EXPECT_EQ(s.mk, (std::vector<BigInt>{15, 1}));
}

TEST(Recursion, Preconditions) {
  const auto f = Field::build(3);
  const auto d = weight_distribution(f, Code::c1, 3);
  const std::vector<BigInt> lower{7, 1};
  EXPECT_THROW(moment_recursive(f, Code::c1, 0, lower, d), std::invalid_argument);
  EXPECT_THROW(moment_recursive(f, Code::c1, 3, lower, d), std::invalid_argument);
  EXPECT_THROW(moment_recursive(f, Code::c1, 2, lower, weight_distribution(f, Code::c1, 1)), std::invalid_argument);
  EXPECT_THROW(moment_recursive(f, Code::c1, 2, lower, weight_distribution(f, Code::c3, 2)), std::invalid_argument);
  EXPECT_THROW(moment_sequence(Field::build(2), Code::c2, 3), std::domain_error);
  EXPECT_NO_THROW(moment_sequence(Field::build(2), Code::c3, 3));
}

TEST(Recursion, MatchesBruteForce) {
  for (unsigned r = 3; r <= 8; ++r) {
    const auto f = Field::build(r);
    const auto brute = moments_bruteforce(kloosterman_table(f), 12);
    for (Code c : kAllCodes) EXPECT_EQ(moment_sequence(f, c, 12).mk, brute) << r << ' ' << code_number(c);
  }
}

// The coset-side recursions carry no lower bound on r; they also hold over
// GF(2) and GF(4), where the codes have length 1..4.
TEST(Recursion, CosetSideHoldsForSmallFields) {
  for (unsigned r = 1; r <= 2; ++r) {
    const auto f = Field::build(r);
    const auto brute = moments_bruteforce(kloosterman_table(f), 12);
    for (Code c : {Code::c3, Code::c4}) EXPECT_EQ(moment_sequence(f, c, 12).mk, brute) << r << ' ' << code_number(c);
  }
}

TEST(Recursion, LongerPrefixChangesNothing) {
  const auto f = Field::build(5);
  const auto brute = moments_bruteforce(kloosterman_table(f), 8);
  for (Code c : kAllCodes) {
    const auto full = weight_distribution(f, c);
    for (unsigned h = 1; h <= 8; ++h) {
      const std::span<const BigInt> lower(brute.data(), h);
      EXPECT_EQ(moment_recursive(f, c, h, lower, full), brute[h]);
    }
  }
}

TEST(Recursion, InvariantUnderRepresentation) {
  for (unsigned r = 3; r <= 5; ++r) {
    const auto reference = moment_sequence(Field::build(r), Code::c1, 10).mk;
    for (Polynomial m : irreducible_polynomials(r)) {
      const auto f = Field::build(r, m);
      for (Code c : kAllCodes) EXPECT_EQ(moment_sequence(f, c, 10).mk, reference) << r << ' ' << m;
      for (Element b = 0; b < f.size(); ++b) {
        if (f.trace(b) != 1) continue;
        for (Code c : {Code::c3, Code::c4})
          EXPECT_EQ(moment_sequence(f.with_b(b), c, 10).mk, reference) << r << ' ' << m << ' ' << b;
      }
    }
  }
}

TEST(Recursion, CoordinateOrderDoesNotMatter) {
  // Any permutation of v_i gives a code with the same distribution.
  std::mt19937 rng(7);
  const auto f = Field::build(4);
  for (Code c : kAllCodes) {
    auto v = build_vector(f, c);
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<BigInt> counts(v.size() + 1, 0);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << v.size()); ++u) {
      BitVector word(v.size(), u);
      if (is_codeword(v, word)) counts[word.count()] += 1;
    }
    EXPECT_EQ(counts, weight_distribution(f, c).counts);
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include <cyclo/error.hpp>
#include <cyclo/numtheory.hpp>

#include "oracle.hpp"

using namespace cyclo;

TEST(Profile, Fifteen) {
  const ArithmeticProfile p = profile(15);
  EXPECT_EQ(p.phi, 8u);
  EXPECT_EQ(p.omega, 2u);
  EXPECT_EQ(p.lpf(), 3u);
  EXPECT_EQ(p.divisors, (std::vector<std::uint64_t>{1, 3, 5, 15}));
  EXPECT_TRUE(p.is_composite());
}

TEST(Profile, Twelve) {
  const ArithmeticProfile p = profile(12);
  EXPECT_EQ(p.phi, 4u);
  EXPECT_EQ(p.omega, 2u);
  EXPECT_EQ(p.lpf(), 2u);
  EXPECT_EQ(p.factorization, (Factorization{{2, 2}, {3, 1}}));
}

TEST(Profile, OneHasNoLeastPrimeFactor) {
  const ArithmeticProfile p = profile(1);
  EXPECT_EQ(p.phi, 1u);
  EXPECT_EQ(p.omega, 0u);
  EXPECT_EQ(p.divisors, (std::vector<std::uint64_t>{1}));
  EXPECT_FALSE(p.is_composite());
  EXPECT_FALSE(p.is_prime());
  EXPECT_THROW((void)p.lpf(), Error);
}

TEST(Profile, MatchesBruteForceUpTo500) {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    const ArithmeticProfile p = profile(n);
    ASSERT_EQ(p.phi, oracle::phi(n)) << n;
    ASSERT_EQ(p.omega, oracle::omega(n)) << n;
    ASSERT_EQ(p.lpf(), oracle::lpf(n)) << n;
    std::uint64_t product = 1;
    for (auto [prime, e] : p.factorization)
      for (unsigned i = 0; i < e; ++i) product *= prime;
    ASSERT_EQ(product, n);
    for (std::uint64_t a : p.divisors)
      for (std::uint64_t b : p.divisors)
        ASSERT_TRUE(std::binary_search(p.divisors.begin(), p.divisors.end(), std::gcd(a, b)));
  }
}

TEST(Factorize, LargeSemiprimes) {
  EXPECT_EQ(factorize(4294967291ull * 4294967279ull), (Factorization{{4294967279ull, 1}, {4294967291ull, 1}}));
  EXPECT_EQ(factorize((1ull << 32) - 1), (Factorization{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {65537, 1}}));
  EXPECT_EQ(factorize(1), Factorization{});
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) ASSERT_EQ(is_prime(n), n >= 2 && oracle::lpf(n) == n) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ull));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(MultiplicativeOrder, MatchesScan) {
  for (std::uint64_t n = 1; n <= 120; ++n)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 25})
      if (std::gcd(q, n) == 1) ASSERT_EQ(multiplicative_order(q, n), oracle::mult_order(q, n)) << q << " " << n;
  EXPECT_THROW((void)multiplicative_order(2, 6), Error);
}

TEST(CheckedPow, SaturatesAtLimit) {
  EXPECT_EQ(checked_pow(2, 24), std::uint64_t{1} << 24);
  EXPECT_EQ(checked_pow(7, 8, 1u << 24), 5764801u);
  EXPECT_EQ(checked_pow(7, 9, 1u << 24), std::nullopt);
  EXPECT_EQ(checked_pow(3, 41), std::nullopt);
  EXPECT_EQ(checked_pow(5, 0), 1u);
}

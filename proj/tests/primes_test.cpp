#include "pistruct/primes.hpp"

#include <gtest/gtest.h>

#include "pistruct/error.hpp"

using namespace pistruct;

TEST(Primes, Basics) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(29));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_divisors(12180), (std::vector<std::uint64_t>{2, 3, 5, 7, 29}));
  EXPECT_EQ(p_part(24, 2), 8u);
  EXPECT_EQ(p_part(24, 5), 1u);
  EXPECT_EQ(prime_power_base(49), 7u);
  EXPECT_FALSE(prime_power_base(1).has_value());
  EXPECT_FALSE(prime_power_base(12).has_value());
  EXPECT_TRUE(is_prime_power_or_one(1));
}

TEST(Primes, FactorizeRoundTrip) {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t back = 1;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      for (unsigned i = 0; i < e; ++i) back *= p;
    }
    EXPECT_EQ(back, n);
  }
}

TEST(PiSet, Numbers) {
  PiSet pi{2, 3, 11};
  EXPECT_TRUE(pi.is_pi_number(1));
  EXPECT_EQ(pi.pi_part(1), 1u);
  EXPECT_TRUE(PiSet({2, 3}).is_pi_number(12));
  EXPECT_FALSE(pi.is_pi_number(55));
  EXPECT_EQ(pi.pi_part(55), 11u);
  EXPECT_TRUE(pi.is_pi_prime_number(35));
  EXPECT_EQ(pi.complement_within(330).primes(), (std::vector<std::uint64_t>{5}));
}

TEST(PiSet, ParseAndPrint) {
  EXPECT_EQ(PiSet::parse("3,2,3").to_string(), "2,3");
  EXPECT_EQ(PiSet::parse("").to_string(), "");
  EXPECT_THROW(PiSet::parse("2,4"), ParseError);
  EXPECT_THROW(PiSet::parse("2,"), ParseError);
  EXPECT_THROW(PiSet::parse("a"), ParseError);
  EXPECT_THROW(PiSet({6}), InvalidArgument);
}

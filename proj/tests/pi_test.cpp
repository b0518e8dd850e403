#include "pistruct/pi.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "pistruct/structure.hpp"

using namespace pistruct;

namespace {

Permutation P(const char* text, std::size_t degree) { return parse_permutation(text, degree); }

PermGroup sym3xc55() { return direct_product(symmetric_group(3), semidirect_by_power_map(11, 3).group); }
PermGroup sym3x55() { return direct_product(symmetric_group(3), semidirect_by_power_map(11, 5).group); }

}  // namespace

TEST(PiElements, Examples) {
  EXPECT_EQ(pi_elements(symmetric_group(3), PiSet{3}).size(), 3u);
  EXPECT_EQ(pi_elements(symmetric_group(4), PiSet{5}).size(), 1u);
  EXPECT_EQ(pi_elements(symmetric_group(4), PiSet{2, 3}, PiFilter::prime_power_only).size(), 24u);
  EXPECT_EQ(pi_elements(cyclic_group(6), PiSet{2, 3}, PiFilter::prime_power_only).size(), 4u);
}

TEST(OPi, Examples) {
  EXPECT_EQ(o_pi(symmetric_group(4), PiSet{2}).order(), 4u);
  EXPECT_EQ(o_pi(symmetric_group(4), PiSet{2, 3}).order(), 24u);
  EXPECT_TRUE(o_pi(alternating_group(5), PiSet{2}).is_trivial());
  EXPECT_EQ(o_pi_prime(sym3x55(), PiSet{2, 3, 11}).order(), 1u);
  EXPECT_EQ(o_pi_pi_prime(symmetric_group(4), PiSet{2}).order(), 12u);
  EXPECT_EQ(o_pi_pi_prime(symmetric_group(4), PiSet{3}).order(), 4u);
}

TEST(PiSeries, Examples) {
  EXPECT_TRUE(is_pi_separable(symmetric_group(4), PiSet{3}));
  EXPECT_FALSE(is_pi_separable(alternating_group(5), PiSet{2}));
  EXPECT_TRUE(is_pi_separable(alternating_group(5), PiSet{2, 3, 5}));
  EXPECT_EQ(pi_length(symmetric_group(3), PiSet{3}), 1u);
  EXPECT_EQ(pi_length(symmetric_group(4), PiSet{2}), 2u);
  auto s = upper_pi_series(symmetric_group(4), PiSet{3});
  EXPECT_TRUE(s.reaches_group);
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    Order f = s.chain[i + 1].order() / s.chain[i].order();
    PiSet pi{3};
    EXPECT_TRUE(s.labels[i] == PiLabel::pi ? pi.is_pi_number(f) : pi.is_pi_prime_number(f));
  }
}

TEST(Hall, Examples) {
  EXPECT_EQ(hall_subgroup(symmetric_group(4), PiSet{2})->order(), 8u);
  EXPECT_EQ(hall_subgroup(symmetric_group(4), PiSet{2, 3})->order(), 24u);
  EXPECT_FALSE(hall_subgroup(alternating_group(5), PiSet{2, 5}).has_value());
  EXPECT_EQ(hall_subgroup(alternating_group(5), PiSet{2, 3})->order(), 12u);
}

TEST(Hall, OrderIsForcedOnAssortedGroups) {
  std::vector<PermGroup> groups{
      sym3x55(), sym3xc55(), direct_product(dihedral_group(4), dihedral_group(5)),
      wreath_natural(symmetric_group(3), 2), direct_product(alternating_group(5), semidirect_by_power_map(29, 16).group),
      direct_product(alternating_group(4), semidirect_by_power_map(7, 2).group), wreath_natural(cyclic_group(3), 3)};
  for (const auto& g : groups)
    for (std::uint64_t mask = 1; mask < 32; ++mask) {
      std::vector<std::uint64_t> primes;
      const std::uint64_t ps[] = {2, 3, 5, 7, 29};
      for (int i = 0; i < 5; ++i)
        if (mask & (1u << i)) primes.push_back(ps[i]);
      PiSet pi(primes);
      if (!is_pi_separable(g, pi)) continue;
      auto h = hall_subgroup(g, pi);
      ASSERT_TRUE(h.has_value()) << g.to_string() << " " << pi.to_string();
      EXPECT_EQ(h->order(), pi.pi_part(g.order()));
      EXPECT_TRUE(h->is_subgroup_of(g));
    }
}

TEST(Hall, ConjugatesMatchExhaustiveSearch) {
  EXPECT_EQ(hall_conjugates(symmetric_group(4), PiSet{2}, *hall_subgroup(symmetric_group(4), PiSet{2})).size(), 3u);
  auto a3 = *hall_subgroup(symmetric_group(3), PiSet{3});
  EXPECT_EQ(hall_conjugates(symmetric_group(3), PiSet{3}, a3).size(), 1u);
  for (const auto& g : {symmetric_group(4), wreath_natural(symmetric_group(3), 2), sym3xc55()})
    for (const auto& pi : {PiSet{2}, PiSet{3}, PiSet{2, 3}, PiSet{3, 11}}) {
      auto h = hall_subgroup(g, pi);
      ASSERT_TRUE(h.has_value());
      EXPECT_EQ(hall_conjugates(g, pi, *h).size(), hall_subgroups_exhaustive(g, pi).size());
    }
}

TEST(Decomposable, Examples) {
  EXPECT_FALSE(is_pi_decomposable(sym3x55(), PiSet{2, 3, 11}));
  EXPECT_FALSE(is_pi_decomposable(direct_product(dihedral_group(4), dihedral_group(5)), PiSet{2}));
  EXPECT_TRUE(is_pi_decomposable(direct_product(symmetric_group(3), cyclic_group(5)), PiSet{2, 3}));
}

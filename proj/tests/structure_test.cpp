#include "pistruct/structure.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pistruct/error.hpp"

using namespace pistruct;

namespace {

Permutation P(const char* text, std::size_t degree) { return parse_permutation(text, degree); }

PermGroup sym3() { return symmetric_group(3); }
PermGroup sym4() { return symmetric_group(4); }
PermGroup d8() { return dihedral_group(4); }
PermGroup d10() { return dihedral_group(5); }

std::vector<Order> class_sizes(const PermGroup& g) {
  std::vector<Order> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Classes, Examples) {
  EXPECT_EQ(class_size(sym4(), P("(1,2)", 4)), 6u);
  EXPECT_EQ(class_sizes(alternating_group(5)), (std::vector<Order>{1, 12, 12, 15, 20}));
  PermGroup c12 = cyclic_group(12);
  for (const auto& x : c12.elements()) EXPECT_EQ(class_size(c12, x), 1u);
}

TEST(Classes, ClassEquationAndCentralisers) {
  for (const auto& g : {sym4(), alternating_group(5), direct_product(d8(), d10()),
                        semidirect_by_power_map(11, 3).group}) {
    ClassTable t(g);
    Order sum = 0;
    for (std::size_t i = 0; i < t.classes().size(); ++i) {
      const auto& c = t.classes()[i];
      sum += c.size;
      EXPECT_EQ(c.size * c.centraliser_order, g.order());
      EXPECT_EQ(t.members(i).front(), c.representative);
      Permutation x = c.representative;
      EXPECT_EQ(centraliser(g, std::span<const Permutation>(&x, 1)).order(), c.centraliser_order);
    }
    EXPECT_EQ(sum, g.order());
  }
}

TEST(Normal, ClosureAndCore) {
  EXPECT_TRUE(core(sym4(), PermGroup(4, {P("(1,2)", 4)})).is_trivial());
  EXPECT_EQ(core(sym4(), sym4()).order(), 24u);
  Permutation x = P("(1,2)(3,4)", 4);
  EXPECT_EQ(normal_closure(sym4(), std::span<const Permutation>(&x, 1)).order(), 4u);
}

TEST(Normal, MinimalNormalSubgroups) {
  auto m = minimal_normal_subgroups(sym4());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].order(), 4u);
  auto a5 = minimal_normal_subgroups(alternating_group(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order(), 60u);
  auto c6 = minimal_normal_subgroups(cyclic_group(6));
  ASSERT_EQ(c6.size(), 2u);
  EXPECT_EQ(c6[0].order(), 2u);
  EXPECT_EQ(c6[1].order(), 3u);
}

TEST(Normal, AllNormalSubgroups) {
  std::vector<Order> orders;
  for (const auto& n : normal_subgroups(sym4())) orders.push_back(n.order());
  EXPECT_EQ(orders, (std::vector<Order>{1, 4, 12, 24}));
  EXPECT_EQ(normal_subgroups(d8()).size(), 6u);
  EXPECT_EQ(normal_subgroups(alternating_group(5)).size(), 2u);
}

TEST(Chief, Examples) {
  auto s = chief_series(sym4());
  ASSERT_EQ(s.factors.size(), 3u);
  EXPECT_EQ(s.factors[0].order, 4u);
  EXPECT_EQ(s.factors[1].order, 3u);
  EXPECT_EQ(s.factors[2].order, 2u);
  EXPECT_EQ(chief_series(alternating_group(5)).chain.size(), 2u);
  auto f = chief_series(semidirect_by_power_map(11, 3).group);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].order, 11u);
  EXPECT_EQ(f.factors[1].order, 5u);
}

TEST(Chief, MembersNormalAndFactorsChief) {
  for (const auto& g : {sym4(), direct_product(d8(), d10()), direct_product(sym3(), alternating_group(5)),
                        wreath_natural(sym3(), 2)}) {
    auto s = chief_series(g);
    annotate_pi(s, PiSet{2});
    for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
      EXPECT_TRUE(is_normal(g, s.chain[i + 1]));
      QuotientMap q = quotient(g, s.chain[i]);
      Subgroup top = q.image_of(s.chain[i + 1]);
      auto minimal = minimal_normal_subgroups(q.image());
      EXPECT_TRUE(std::any_of(minimal.begin(), minimal.end(), [&](const Subgroup& m) { return m == top; }));
      EXPECT_TRUE(s.factors[i].is_pi_group.has_value());
    }
  }
}

TEST(Covers, Examples) {
  PermGroup g = sym4();
  Subgroup v4(4, {P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)});
  Subgroup one = Subgroup::trivial(4);
  EXPECT_FALSE(covers(Subgroup(4, {P("(1,3,2,4)", 4), P("(1,2)(3,4)", 4)}), v4, one));
  EXPECT_FALSE(covers(Subgroup(4, {P("(3,4)", 4), P("(2,3,4)", 4)}), v4, one));
  EXPECT_TRUE(covers(g, v4, one));
  EXPECT_TRUE(covers(one, v4, v4));
}

TEST(Characteristic, Examples) {
  EXPECT_EQ(center(direct_product(d8(), d10())).order(), 2u);
  EXPECT_EQ(derived_subgroup(sym3()).order(), 3u);
  EXPECT_EQ(fitting_subgroup(sym4()).order(), 4u);
  EXPECT_EQ(o_p(sym4(), 3).order(), 1u);
  EXPECT_EQ(characteristic_subgroup(sym4(), Characteristic::o_p, 2).order(), 4u);
  EXPECT_EQ(socle(direct_product(sym3(), d10())).order(), 15u);
  EXPECT_THROW(characteristic_subgroup(sym4(), Characteristic::o_p, 4), InvalidArgument);
}

TEST(Predicates, SolubleNilpotentSubnormal) {
  EXPECT_TRUE(is_soluble(sym4()));
  EXPECT_FALSE(is_soluble(alternating_group(5)));
  EXPECT_TRUE(is_nilpotent(d8()));
  EXPECT_FALSE(is_nilpotent(sym3()));
  Subgroup c2(4, {P("(1,2)(3,4)", 4)});
  EXPECT_TRUE(is_subnormal(sym4(), c2));
  EXPECT_FALSE(is_subnormal(sym4(), Subgroup(4, {P("(1,2)", 4)})));
}

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow_subgroup(sym4(), 2).order(), 8u);
  EXPECT_TRUE(sylow_subgroup(sym4(), 5).is_trivial());
  EXPECT_EQ(sylow_subgroup(alternating_group(5), 2).order(), 4u);
  PermGroup big = direct_product(alternating_group(5), semidirect_by_power_map(29, 16).group);
  for (auto p : prime_divisors(big.order())) EXPECT_EQ(sylow_subgroup(big, p).order(), p_part(big.order(), p));
}

TEST(Frobenius, Examples) {
  EXPECT_TRUE(is_frobenius_with(sym3(), Subgroup(3, {P("(1,2,3)", 3)}), Subgroup(3, {P("(1,2)", 3)})));
  EXPECT_TRUE(is_frobenius_with(d10(), Subgroup(5, {P("(1,2,3,4,5)", 5)}), Subgroup(5, {P("(2,5)(3,4)", 5)})));
  EXPECT_FALSE(frobenius_decomposition(d8()).has_value());
  auto a4 = frobenius_decomposition(alternating_group(4));
  ASSERT_TRUE(a4.has_value());
  EXPECT_EQ(a4->first.order(), 4u);
  EXPECT_FALSE(frobenius_decomposition(cyclic_group(6)).has_value());
}

TEST(Frobenius, KernelClassSizesAreMultiplesOfComplement) {
  for (const auto& g : {sym3(), d10(), alternating_group(4), semidirect_by_power_map(11, 3).group,
                        semidirect_by_power_map(29, 16).group}) {
    auto fd = frobenius_decomposition(g);
    ASSERT_TRUE(fd.has_value());
    for (const auto& k : fd->first.elements())
      if (!k.is_identity()) EXPECT_EQ(class_size(g, k) % fd->second.order(), 0u);
  }
}

TEST(PNilpotent, Examples) {
  EXPECT_TRUE(is_p_nilpotent(sym3(), 2));
  EXPECT_FALSE(is_p_nilpotent(sym3(), 3));
  EXPECT_TRUE(is_p_nilpotent(sym3(), 7));
  EXPECT_TRUE(is_p_nilpotent(alternating_group(4), 3));
  EXPECT_FALSE(is_p_nilpotent(alternating_group(4), 2));
}

TEST(Strip, Examples) {
  auto s = strip_abelian_direct_factors(direct_product(cyclic_group(2), sym3()));
  EXPECT_EQ(s.abelian.order(), 2u);
  EXPECT_EQ(s.rest.order(), 6u);
  auto t = strip_abelian_direct_factors(sym3());
  EXPECT_TRUE(t.abelian.is_trivial());
  auto a = strip_abelian_direct_factors(cyclic_group(10));
  EXPECT_EQ(a.abelian.order(), 10u);
  EXPECT_TRUE(a.rest.is_trivial());
}

TEST(Strip, DirectProductEquations) {
  for (const auto& g : {direct_product(cyclic_group(4), d8()), direct_product(d8(), d10()),
                        direct_product(cyclic_group(6), sym3()), direct_product(cyclic_group(3), alternating_group(4))}) {
    auto s = strip_abelian_direct_factors(g);
    EXPECT_FALSE(s.cap_bound);
    EXPECT_TRUE(is_normal(g, s.abelian));
    EXPECT_TRUE(is_normal(g, s.rest));
    EXPECT_TRUE(s.abelian.is_abelian());
    EXPECT_TRUE(intersect(s.abelian, s.rest).is_trivial());
    EXPECT_EQ(s.abelian.order() * s.rest.order(), g.order());
  }
  EXPECT_EQ(strip_abelian_direct_factors(direct_product(cyclic_group(4), d8())).abelian.order(), 4u);
  EXPECT_EQ(strip_abelian_direct_factors(direct_product(cyclic_group(6), sym3())).abelian.order(), 6u);
}

TEST(Divisibility, NormalSubgroupAndQuotientClassSizes) {
  std::mt19937_64 rng(7);
  std::vector<PermGroup> groups{sym4(), direct_product(d8(), d10()), wreath_natural(sym3(), 2),
                                direct_product(sym3(), semidirect_by_power_map(11, 5).group)};
  for (const auto& g : groups) {
    auto normals = normal_subgroups(g);
    for (const auto& n : normals) {
      QuotientMap q = quotient(g, n);
      const auto& ne = n.elements();
      for (int i = 0; i < 5; ++i) {
        const auto& x = ne[rng() % ne.size()];
        EXPECT_EQ(class_size(g, x) % class_size(n, x), 0u);
        const auto& y = g.elements()[rng() % g.order()];
        EXPECT_EQ(class_size(g, y) % class_size(q.image(), q.forward(y)), 0u);
      }
    }
  }
}

#include "pistruct/permutation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pistruct/error.hpp"

using namespace pistruct;

namespace {

std::vector<Point> one_based(const Permutation& p) {
  std::vector<Point> out;
  for (Point x : p.images()) out.push_back(x + 1);
  return out;
}

}  // namespace

TEST(Permutation, ParsesDisjointCycles) {
  auto p = parse_permutation("(1,2)(3,4)", 4);
  EXPECT_EQ(one_based(p), (std::vector<Point>{2, 1, 4, 3}));
}

TEST(Permutation, EmptyParensIsIdentity) {
  auto p = parse_permutation("()", 5);
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.degree(), 5u);
  EXPECT_EQ(p.to_string(), "()");
}

TEST(Permutation, ProductAppliesLeftFactorFirst) {
  // (1,3,2,4)^2 computed by hand: 1->3->2, 2->4->1, 3->2->4, 4->1->3.
  auto a = parse_permutation("(1,3,2,4)", 4);
  EXPECT_EQ(a * a, parse_permutation("(1,2)(3,4)", 4));
  auto x = parse_permutation("(1,2)", 3);
  auto y = parse_permutation("(2,3)", 3);
  // x first: 1->2->3, 3->3->2, 2->1->1.
  EXPECT_EQ(x * y, parse_permutation("(1,3,2)", 3));
}

TEST(Permutation, ConjugationIsRightAction) {
  auto z = parse_permutation("(1,4)(2,5)(3,6)", 6);
  EXPECT_EQ(conjugate(parse_permutation("(1,2,3)", 6), z), parse_permutation("(4,5,6)", 6));
  EXPECT_EQ(conjugate(parse_permutation("(2,3)", 6), z), parse_permutation("(5,6)", 6));
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(parse_permutation("(1,2)(3,4,5)", 5).order(), 6u);
  EXPECT_EQ(parse_permutation("()", 3).order(), 1u);
  auto p = parse_permutation("(1,2,3,4,5,6)", 6);
  EXPECT_TRUE(p.pow(6).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
}

TEST(Permutation, ParseErrorsCarryPosition) {
  auto position_of = [](std::string_view text, std::size_t degree) -> std::size_t {
    try {
      parse_permutation(text, degree);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of("(1,2", 4), 4u);
  EXPECT_EQ(position_of("(1,2)(2,3)", 4), 6u);   // repeated point
  EXPECT_EQ(position_of("(1,5)", 4), 3u);        // exceeds degree
  EXPECT_EQ(position_of("(1, 2)", 4), 3u);       // whitespace is not allowed
  EXPECT_EQ(position_of("(1)", 4), 2u);
  EXPECT_EQ(position_of("1,2", 4), 0u);
  EXPECT_EQ(position_of("(0,1)", 4), 1u);
  EXPECT_EQ(position_of("", 4), 0u);
}

TEST(Permutation, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 12;
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
    Permutation p(images);
    auto text = p.to_string();
    auto q = parse_permutation(text, n);
    EXPECT_EQ(p, q) << text;
    EXPECT_EQ(q.to_string(), text);
    EXPECT_TRUE((p * p.inverse()).is_identity());
  }
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InvalidArgument);
}

#include <gtest/gtest.h>

#include "cnz/error.hpp"
#include "cnz/grid.hpp"
#include "cnz/random.hpp"
#include "cnz/ring.hpp"

namespace cnz {
namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Ring, ArithmeticExamples) {
  auto f5 = RingSpec::prime_field(5);
  EXPECT_EQ(f5.add(3, 4), 2);
  auto z = RingSpec::integers();
  EXPECT_EQ(z.mul(-2, 3), -6);
  auto z6 = RingSpec::integers_mod(6);
  EXPECT_EQ(z6.mul(2, 3), 0);
}

TEST(Ring, Inverses) {
  EXPECT_EQ(RingSpec::prime_field(7).inverse(3), 5);
  EXPECT_EQ(RingSpec::prime_field(5).inverse(1), 1);
  EXPECT_EQ(RingSpec::prime_field(11).inverse(10), 10);
  try {
    RingSpec::prime_field(7).inverse(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  try {
    RingSpec::integers_mod(6).inverse(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedRing);
  }
}

TEST(Ring, InverseRoundTripOnLargePrime) {
  const std::uint64_t p = 9223372036854775783ULL;  // largest prime below 2^63
  auto ring = RingSpec::prime_field(p);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Int a = 1 + rng.below(p - 1);
    EXPECT_EQ(ring.mul(a, ring.inverse(a)), 1);
  }
}

TEST(Ring, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime(9223372036854775783ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Ring, ConstructionErrors) {
  EXPECT_THROW(RingSpec::prime_field(4), Error);
  EXPECT_THROW(RingSpec::integers_mod(1), Error);
  EXPECT_THROW(RingSpec::parse("fp:"), Error);
  EXPECT_THROW(RingSpec::parse("gf:7"), Error);
  EXPECT_EQ(RingSpec::parse("fp:7"), RingSpec::prime_field(7));
  EXPECT_EQ(RingSpec::parse("int"), RingSpec::integers());
  EXPECT_EQ(RingSpec::parse("zmod:6"), RingSpec::integers_mod(6));
}

TEST(Ring, CanonicalFormIsUnique) {
  auto ring = RingSpec::integers_mod(9);
  for (int x = -30; x <= 30; ++x) {
    Int c = ring.canonical(x);
    EXPECT_GE(c, 0);
    EXPECT_LT(c, 9);
    EXPECT_EQ(c, ring.canonical(x + 9));
  }
}

TEST(Ring, ModularLawsAgainstIntegerReduction) {
  Rng rng(11);
  for (std::uint64_t m : {2ULL, 6ULL, 97ULL, 4294967311ULL, 9223372036854775783ULL}) {
    auto ring = RingSpec::integers_mod(m);
    for (int i = 0; i < 200; ++i) {
      Int a = rng.below(m), b = rng.below(m);
      EXPECT_EQ(ring.add(a, b), (a + b) % m);
      EXPECT_EQ(ring.mul(a, b), (a * b) % m);
      EXPECT_EQ(ring.sub(a, b), ((a - b) % m + m) % m);
      std::uint64_t k = rng.below(40);
      EXPECT_EQ(ring.pow(a, k), boost::multiprecision::powm(a, Int(k), Int(m)));
    }
  }
}

TEST(Ring, ElementsFromDifferentRingsDoNotMix) {
  RingElem a(RingSpec::prime_field(5), 2);
  RingElem b(RingSpec::prime_field(7), 2);
  try {
    add(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRingMismatch);
  }
  EXPECT_EQ(mul(a, invert(a)), RingElem(RingSpec::prime_field(5), 1));
}

TEST(Ring, GridCondition) {
  auto z6 = RingSpec::integers_mod(6);
  EXPECT_FALSE(grid_condition_check(z6, GridSpec(z6, {{0, 2}})).pass);
  EXPECT_TRUE(grid_condition_check(z6, GridSpec(z6, {{0, 1}})).pass);
  auto f5 = RingSpec::prime_field(5);
  EXPECT_TRUE(grid_condition_check(f5, GridSpec(f5, {{0, 1, 2, 3, 4}, {1, 3}})).pass);
  auto failing = grid_condition_check(z6, GridSpec(z6, {{0, 1}, {1, 4}}));
  EXPECT_FALSE(failing.pass);
  ASSERT_TRUE(failing.variable.has_value());
  EXPECT_EQ(*failing.variable, 1u);
}

TEST(Grid, ParseAndValidate) {
  auto z = RingSpec::integers();
  auto g = GridSpec::parse("# ellipse grid\n-1,0,1\n-1, 0, 1\n", z);
  EXPECT_EQ(g.arity(), 2u);
  EXPECT_EQ(g.point_count(), 9);
  EXPECT_THROW(GridSpec::parse("1,1\n", z), Error);
  EXPECT_THROW(GridSpec::parse("1,,2\n", z), Error);
  EXPECT_THROW(GridSpec::parse("", z), Error);
  // Distinctness is checked after reduction.
  EXPECT_THROW(GridSpec::parse("1,6\n", RingSpec::prime_field(5)), Error);
}

TEST(Grid, DecodeIsOdometerOrder) {
  auto z = RingSpec::integers();
  GridSpec g(z, {{10, 20}, {1, 2, 3}});
  std::vector<std::vector<Int>> expected = {{10, 1}, {10, 2}, {10, 3}, {20, 1}, {20, 2}, {20, 3}};
  for (std::uint64_t i = 0; i < 6; ++i) EXPECT_EQ(g.point(i), expected[i]);
}

}  // namespace
}  // namespace cnz

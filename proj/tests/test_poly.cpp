#include <gtest/gtest.h>

#include "cnz/error.hpp"
#include "cnz/oracle.hpp"
#include "cnz/parser.hpp"
#include "cnz/poly.hpp"
#include "support.hpp"

namespace cnz {
namespace {

const RingSpec kZ = RingSpec::integers();

Polynomial P(const std::string& text, RingSpec ring = kZ, std::vector<std::string> vars = {"x1", "x2"}) {
  return parse_poly(text, vars, ring);
}

TEST(Poly, Examples) {
  auto x = Polynomial::variable(kZ, 2, 0);
  auto y = Polynomial::variable(kZ, 2, 1);
  EXPECT_EQ((x + y) + (x - y), x.scale(2));
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_TRUE((x + y).scale(0).is_zero());
}

TEST(Poly, EllipseEvaluation) {
  auto f = P("x1^2 - x1*x2 + x2^2 - 1");
  std::vector<Int> p11{1, 1}, p00{0, 0};
  EXPECT_EQ(f.evaluate(p11), 0);
  EXPECT_EQ(f.evaluate(p00), -1);
  EXPECT_EQ(Polynomial(kZ, 2).evaluate(p11), 0);
}

TEST(Poly, Degrees) {
  auto f = P("x1^7 + x1^6*x2^9 + x1*x2^2 + x1*x2 + x2^6");
  EXPECT_EQ(f.degrees().partial, (Exponents{7, 9}));
  EXPECT_EQ(f.degrees().total, 15u);
  auto c = Polynomial::constant(kZ, 3, 5);
  EXPECT_EQ(c.degrees().partial, (Exponents{0, 0, 0}));
  EXPECT_EQ(c.degrees().total, 0u);
  EXPECT_EQ(P("x1^2 - x1*x2 + x2^2 - 1").degrees().partial, (Exponents{2, 2}));
  try {
    Polynomial(kZ, 2).degrees();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedDegree);
  }
}

TEST(Poly, NoZeroCoefficientsAreStored) {
  auto f5 = RingSpec::prime_field(5);
  auto f = P("3*x1 + 2*x1 + x2", f5);
  EXPECT_EQ(f.term_count(), 1u);
  EXPECT_FALSE(f.contains({1, 0}));
}

TEST(Poly, DivideLinear) {
  auto r1 = divide_linear(P("x1^2 - 1"), 0, 1);
  EXPECT_EQ(r1.quotient, P("x1 + 1"));
  EXPECT_TRUE(r1.remainder.is_zero());
  auto r2 = divide_linear(P("x1*x2"), 0, 0);
  EXPECT_EQ(r2.quotient, P("x2"));
  EXPECT_TRUE(r2.remainder.is_zero());
  auto f = P("x1^2 - x1*x2 + x2^2 - 1");
  auto r3 = divide_linear(f, 0, 1);
  EXPECT_EQ(r3.quotient, P("x1 + 1 - x2"));
  EXPECT_EQ(r3.remainder, P("x2^2 - x2"));
  EXPECT_EQ(r3.quotient * P("x1 - 1") + r3.remainder, f);
}

TEST(Poly, DivideLinearReconstructsRandomInputs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto ring = RingSpec::prime_field(13);
    auto f = random_polynomial(3, {4, 3, 2}, 0.5, ring, seed);
    for (std::size_t var = 0; var < 3; ++var) {
      Int a = seed % 13;
      auto div = divide_linear(f, var, a);
      auto lin = Polynomial::variable(ring, 3, var) - Polynomial::constant(ring, 3, a);
      EXPECT_EQ(div.quotient * lin + div.remainder, f);
      for (const auto& [e, c] : div.remainder.terms()) EXPECT_EQ(e[var], 0u);
    }
  }
}

TEST(Poly, DecomposeByVariable) {
  auto parts = decompose_by_variable(P("x1^2 - x1*x2 + x2^2 - 1"), 0);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], P("x2^2 - 1"));
  EXPECT_EQ(parts[1], P("-x2"));
  EXPECT_EQ(parts[2], P("1"));
  auto only = decompose_by_variable(P("x2^3"), 0);
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0], P("x2^3"));
  auto pure = decompose_by_variable(P("x1^5"), 0);
  ASSERT_EQ(pure.size(), 6u);
  EXPECT_EQ(pure[5], P("1"));
  for (std::size_t k = 0; k < 5; ++k) EXPECT_TRUE(pure[k].is_zero());
}

TEST(Poly, DecomposeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto f = random_polynomial(3, {3, 3, 3}, 0.4, RingSpec::prime_field(7), seed);
    if (f.is_zero()) continue;
    for (std::size_t var = 0; var < 3; ++var) EXPECT_EQ(recompose_by_variable(decompose_by_variable(f, var), var), f);
  }
}

TEST(Poly, VanishingPolynomial) {
  auto g = GridSpec(kZ, {{0, 1}, {-1, 0, 1}, {4}});
  auto vars = std::vector<std::string>{"x1", "x2", "x3"};
  EXPECT_EQ(vanishing_poly(g, 0), P("x1^2 - x1", kZ, vars));
  EXPECT_EQ(vanishing_poly(g, 1), P("x2^3 - x2", kZ, vars));
  EXPECT_EQ(vanishing_poly(g, 2), P("x3 - 4", kZ, vars));
}

TEST(Poly, RingHomomorphismUnderEvaluation) {
  auto ring = RingSpec::prime_field(101);
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto f = random_polynomial(2, {3, 3}, 0.5, ring, 2 * seed);
    auto g = random_polynomial(2, {3, 3}, 0.5, ring, 2 * seed + 1);
    std::vector<Int> pt{rng.below(101), rng.below(101)};
    EXPECT_EQ((f + g).evaluate(pt), ring.add(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ((f * g).evaluate(pt), ring.mul(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ(f.pow(3).evaluate(pt), ring.pow(f.evaluate(pt), 3));
    EXPECT_EQ(f.evaluate(pt), test::naive_eval(f, pt));
  }
}

TEST(Poly, RingAxioms) {
  auto ring = RingSpec::integers_mod(12);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = random_polynomial(2, {2, 2}, 0.6, ring, 3 * seed);
    auto b = random_polynomial(2, {2, 2}, 0.6, ring, 3 * seed + 1);
    auto c = random_polynomial(2, {2, 2}, 0.6, ring, 3 * seed + 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Poly, MixingRingsOrArityFails) {
  auto a = Polynomial::variable(kZ, 2, 0);
  auto b = Polynomial::variable(RingSpec::prime_field(5), 2, 0);
  auto c = Polynomial::variable(kZ, 3, 0);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * c, Error);
}

TEST(Poly, RenderIsGradedLex) {
  EXPECT_EQ(render(P("-1 + x2^2 - x1*x2 + x1^2")), "x1^2 - x1*x2 + x2^2 - 1");
  EXPECT_EQ(render(Polynomial(kZ, 2)), "0");
  EXPECT_EQ(render(P("-3*x1^2*x2 + 2")), "-3*x1^2*x2 + 2");
}

}  // namespace
}  // namespace cnz

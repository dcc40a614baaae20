#include <gtest/gtest.h>

#include <set>

#include "cnz/error.hpp"
#include "cnz/oracle.hpp"
#include "cnz/parser.hpp"
#include "cnz/pit.hpp"
#include "support.hpp"

namespace cnz {
namespace {

const RingSpec kZ = RingSpec::integers();
const std::vector<std::string> kXY{"x", "y"};

std::size_t count_kind(const ExprDag& dag, NodeKind kind) {
  std::size_t n = 0;
  for (const auto& node : dag.nodes()) n += node.kind == kind;
  return n;
}

TEST(Parser, Examples) {
  auto ellipse = parse_poly("x^2 - x*y + y^2 - 1", kXY, kZ);
  Polynomial expected(kZ, 2);
  expected.add_term({2, 0}, 1);
  expected.add_term({1, 1}, -1);
  expected.add_term({0, 2}, 1);
  expected.add_term({0, 0}, -1);
  EXPECT_EQ(ellipse, expected);
  EXPECT_EQ(parse_poly("(x+y)^2", kXY, kZ), parse_poly("x^2 + 2*x*y + y^2", kXY, kZ));
  EXPECT_TRUE(parse_poly("0", kXY, kZ).is_zero());
}

TEST(Parser, DagKeepsStructure) {
  auto pow16 = parse_dag("(x+y)^16", kXY, kZ);
  ASSERT_EQ(count_kind(pow16, NodeKind::kPow), 1u);
  EXPECT_EQ(pow16.nodes()[pow16.root()].payload, 16u);

  auto shared = parse_dag("x*y + x*y", kXY, kZ);
  EXPECT_EQ(count_kind(shared, NodeKind::kMul), 1u);
  const auto& root = shared.nodes()[shared.root()];
  EXPECT_EQ(root.kind, NodeKind::kAdd);
  EXPECT_EQ(root.lhs, root.rhs);

  auto sub = parse_dag("x - x", kXY, kZ);
  EXPECT_EQ(sub.nodes()[sub.root()].kind, NodeKind::kSub);
}

TEST(Parser, NodesAreTopologicallyOrdered) {
  auto dag = parse_dag("((x+1)*(y-2))^3 - -x + 7*(x*y)^2", kXY, kZ);
  for (std::size_t i = 0; i < dag.nodes().size(); ++i) {
    const auto& node = dag.nodes()[i];
    if (node.kind == NodeKind::kVar || node.kind == NodeKind::kConst) continue;
    EXPECT_LT(node.lhs, i);
    if (node.kind != NodeKind::kNeg && node.kind != NodeKind::kPow) EXPECT_LT(node.rhs, i);
  }
}

TEST(Parser, Precedence) {
  std::vector<Int> pt{2, 3};
  EXPECT_EQ(parse_poly("x + y*2", kXY, kZ).evaluate(pt), 8);
  EXPECT_EQ(parse_poly("-x^2", kXY, kZ).evaluate(pt), -4);
  EXPECT_EQ(parse_poly("x - y - 1", kXY, kZ).evaluate(pt), -2);
  EXPECT_EQ(parse_poly("2*(x + y)^2", kXY, kZ).evaluate(pt), 50);
}

TEST(Parser, Errors) {
  auto code_of = [](const std::string& text) {
    try {
      parse_dag(text, {"x", "y"}, RingSpec::integers());
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of("x +"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("2x"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("x^2^3"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("(x + y"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("x $ y"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("x^-1"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("z + 1"), ErrorCode::kUnknownVariable);
  EXPECT_EQ(code_of("x^99999999"), ErrorCode::kExponentOverflow);
  try {
    parse_dag("x + * y", kXY, kZ);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parser, InferVariables) {
  EXPECT_EQ(infer_variables("x1^2 + x3"), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(infer_variables("b*a + b"), (std::vector<std::string>{"b", "a"}));
}

TEST(Parser, RenderRoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto ring = seed % 2 ? RingSpec::prime_field(31) : RingSpec::integers();
    auto f = random_polynomial(3, {3, 2, 4}, 0.4, ring, seed);
    auto names = default_variable_names(3);
    EXPECT_EQ(parse_poly(render(f, names), names, ring), f) << render(f, names);
  }
}

TEST(Parser, DagEvaluationMatchesExpansion) {
  auto ring = RingSpec::prime_field(101);
  auto dag = parse_dag("((x + 1)*(y + 2) - 3*x)^3 - (x*y)^2 + -(y - x)", kXY, ring);
  auto f = expand(dag);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<Int> pt{rng.below(101), rng.below(101)};
    EXPECT_EQ(eval_dag(dag, pt), f.evaluate(pt));
  }
}

}  // namespace
}  // namespace cnz

#include "cnz/pit.hpp"

#include <algorithm>
#include <limits>

#include "cnz/error.hpp"
#include "cnz/parallel.hpp"
#include "cnz/random.hpp"
#include "grid_eval.hpp"

namespace cnz {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Evaluates into a caller-owned scratch buffer to avoid reallocations.
Int eval_into(const ExprDag& dag, std::span<const Int> point, std::vector<Int>& scratch) {
  const auto& ring = dag.ring();
  const auto& nodes = dag.nodes();
  if (nodes.empty()) return 0;
  scratch.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    switch (node.kind) {
      case NodeKind::kVar: scratch[i] = ring.canonical(point[node.payload]); break;
      case NodeKind::kConst: scratch[i] = node.constant; break;
      case NodeKind::kAdd: scratch[i] = ring.add(scratch[node.lhs], scratch[node.rhs]); break;
      case NodeKind::kSub: scratch[i] = ring.sub(scratch[node.lhs], scratch[node.rhs]); break;
      case NodeKind::kMul: scratch[i] = ring.mul(scratch[node.lhs], scratch[node.rhs]); break;
      case NodeKind::kNeg: scratch[i] = ring.neg(scratch[node.lhs]); break;
      case NodeKind::kPow: scratch[i] = ring.pow(scratch[node.lhs], node.payload); break;
    }
  }
  return scratch[dag.root()];
}

void check_point(const ExprDag& dag, std::size_t size) {
  if (size != dag.arity()) {
    throw Error(ErrorCode::kArityMismatch, "point of length " + std::to_string(size) +
                                               " for arity " + std::to_string(dag.arity()));
  }
}

DagCount count_range(const ExprDag& dag, const GridSpec& grid, std::uint64_t begin,
                     std::uint64_t end) {
  std::vector<std::size_t> digits(grid.arity());
  std::vector<Int> point(grid.arity());
  std::vector<Int> scratch;
  grid.decode(begin, digits);
  DagCount out;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    for (std::size_t i = 0; i < digits.size(); ++i) point[i] = grid.set(i)[digits[i]];
    if (eval_into(dag, point, scratch) == 0) ++out.zeros;
    detail::advance(digits, grid);
  }
  out.points = end - begin;
  return out;
}

void check_grid(const ExprDag& dag, const GridSpec& grid) {
  if (!(dag.ring() == grid.ring())) throw Error(ErrorCode::kRingMismatch, "grid over another ring");
  if (dag.arity() != grid.arity()) throw Error(ErrorCode::kArityMismatch, "grid of another arity");
}

}  // namespace

Int eval_dag(const ExprDag& dag, std::span<const Int> point) {
  check_point(dag, point.size());
  std::vector<Int> scratch;
  return eval_into(dag, point, scratch);
}

RingElem eval_dag(const ExprDag& dag, const std::vector<RingElem>& point) {
  check_point(dag, point.size());
  std::vector<Int> values;
  for (const auto& x : point) {
    if (!(x.ring() == dag.ring())) throw Error(ErrorCode::kRingMismatch, "point from another ring");
    values.push_back(x.value());
  }
  return RingElem(dag.ring(), eval_dag(dag, values));
}

std::uint64_t degree_upper_bound(const ExprDag& dag) {
  const auto& nodes = dag.nodes();
  if (nodes.empty()) return 0;
  std::vector<std::uint64_t> deg(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    switch (node.kind) {
      case NodeKind::kVar: deg[i] = 1; break;
      case NodeKind::kConst: deg[i] = 0; break;
      case NodeKind::kAdd:
      case NodeKind::kSub: deg[i] = std::max(deg[node.lhs], deg[node.rhs]); break;
      case NodeKind::kMul: deg[i] = sat_add(deg[node.lhs], deg[node.rhs]); break;
      case NodeKind::kNeg: deg[i] = deg[node.lhs]; break;
      case NodeKind::kPow: deg[i] = sat_mul(deg[node.lhs], node.payload); break;
    }
  }
  return deg[dag.root()];
}

GridSpec sample_grid(const ExprDag& dag, std::uint64_t samples_per_var) {
  std::vector<Int> set;
  for (std::uint64_t k = 0; k < samples_per_var; ++k) set.emplace_back(k);
  return GridSpec::uniform(dag.ring(), dag.arity(), set);
}

PitVerdict identity_test(const ExprDag& g1, const ExprDag& g2, std::uint64_t samples_per_var,
                         std::uint64_t trials, std::uint64_t seed) {
  const auto& ring = g1.ring();
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupportedRing, "identity testing needs a prime field, got " + ring.to_string());
  }
  if (samples_per_var == 0 || samples_per_var > ring.modulus()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample set size must lie in [1, p] = [1, " + std::to_string(ring.modulus()) + "]");
  }
  ExprDag diff = ExprDag::difference(g1, g2);
  std::uint64_t d = degree_upper_bound(diff);
  if (d >= samples_per_var) {
    throw Error(ErrorCode::kHypothesisViolation,
                "insufficient sample space: degree bound " + std::to_string(d) +
                    " is not below |S| = " + std::to_string(samples_per_var));
  }
  std::size_t n = diff.arity();

  // Points are drawn serially so that they depend only on the seed.
  Rng rng(seed);
  std::vector<std::uint64_t> coords(trials * n);
  for (auto& c : coords) c = rng.below(samples_per_var);

  std::vector<std::uint64_t> first_hit(thread_count() + 1, kSaturated);
  int blocks = parallel_blocks(trials, [&](std::uint64_t begin, std::uint64_t end, int b) {
    std::vector<Int> point(n);
    std::vector<Int> scratch;
    for (std::uint64_t t = begin; t < end; ++t) {
      for (std::size_t i = 0; i < n; ++i) point[i] = coords[t * n + i];
      if (eval_into(diff, point, scratch) != 0) {
        first_hit[b] = t;
        return;
      }
    }
  });

  PitVerdict verdict;
  verdict.trials = trials;
  verdict.degree_bound_used = d;
  verdict.samples_per_var = samples_per_var;
  verdict.seed = seed;
  std::uint64_t hit = *std::min_element(first_hit.begin(), first_hit.begin() + blocks);
  if (hit != kSaturated) {
    verdict.kind = PitVerdict::Kind::kNonzeroWitnessed;
    verdict.witness_trial = hit;
    for (std::size_t i = 0; i < n; ++i) verdict.point.emplace_back(coords[hit * n + i]);
    verdict.value = eval_dag(diff, verdict.point);
    return verdict;
  }
  verdict.kind = PitVerdict::Kind::kAllZero;
  if (trials > std::numeric_limits<unsigned>::max()) {
    throw Error(ErrorCode::kResourceLimit, "too many trials");
  }
  auto t = static_cast<unsigned>(trials);
  verdict.failure_bound = Rational(boost::multiprecision::pow(Int(d), t),
                                   boost::multiprecision::pow(Int(samples_per_var), t));
  return verdict;
}

DagCount count_dag_zeros_serial(const ExprDag& dag, const GridSpec& grid) {
  check_grid(dag, grid);
  std::uint64_t points = detail::checked_point_count(grid, 100'000'000);
  return count_range(dag, grid, 0, points);
}

DagCount count_dag_zeros(const ExprDag& dag, const GridSpec& grid) {
  check_grid(dag, grid);
  std::uint64_t points = detail::checked_point_count(grid, 100'000'000);
  std::vector<DagCount> partial(thread_count() + 1);
  int blocks = parallel_blocks(points, [&](std::uint64_t begin, std::uint64_t end, int b) {
    partial[b] = count_range(dag, grid, begin, end);
  });
  DagCount out;
  for (int b = 0; b < blocks; ++b) {
    out.zeros += partial[b].zeros;
    out.points += partial[b].points;
  }
  return out;
}

}  // namespace cnz

#include "cnz/transform.hpp"

#include <algorithm>

#include "cnz/error.hpp"
#include "cnz/parallel.hpp"
#include "grid_eval.hpp"

namespace cnz {

Polynomial trim(const Polynomial& f, const GridSpec& grid) {
  if (!(f.ring() == grid.ring())) {
    throw Error(ErrorCode::kRingMismatch, "polynomial and grid over different rings");
  }
  if (f.arity() != grid.arity()) {
    throw Error(ErrorCode::kArityMismatch, "polynomial and grid of different arity");
  }
  auto condition = grid_condition_check(f.ring(), grid);
  if (!condition.pass) throw Error(ErrorCode::kHypothesisViolation, condition.message);
  if (f.is_zero()) return f;

  const auto& ring = f.ring();
  Polynomial out = f;
  for (std::size_t var = 0; var < f.arity(); ++var) {
    if (out.is_zero()) break;
    std::size_t s = grid.size(var);
    auto parts = decompose_by_variable(out, var);
    if (parts.size() <= s) continue;
    // x^s = x^s - V(x) on S, with V the monic vanishing polynomial; reduce
    // the top coefficient repeatedly.
    auto vanishing = decompose_by_variable(vanishing_poly(grid, var), var);
    std::vector<Int> low(s);  // x^s == -(v_0 + ... + v_{s-1} x^{s-1})
    for (std::size_t j = 0; j < s; ++j) {
      Exponents zero(f.arity(), 0);
      low[j] = ring.neg(vanishing[j].coefficient(zero));
    }
    for (std::size_t k = parts.size() - 1; k >= s; --k) {
      if (parts[k].is_zero()) continue;
      for (std::size_t j = 0; j < s; ++j) {
        if (low[j] != 0) parts[k - s + j] += parts[k].scale(low[j]);
      }
      parts[k] = Polynomial(ring, f.arity());
    }
    parts.resize(s, Polynomial(ring, f.arity()));
    out = recompose_by_variable(parts, var);
  }
  return out;
}

Int Multipliers::moment(std::uint64_t k) const {
  Int sum = 0;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    sum = ring.add(sum, ring.mul(weights[j], ring.pow(elements[j], k)));
  }
  return sum;
}

bool Multipliers::check() const {
  for (std::uint64_t k = 0; k <= degree; ++k) {
    if (moment(k) != (k == degree ? 1 : 0)) return false;
  }
  return true;
}

Multipliers vandermonde_multipliers(RingSpec ring, const std::vector<Int>& set,
                                    std::optional<std::uint64_t> degree) {
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupportedRing, "multipliers need a prime field, got " + ring.to_string());
  }
  if (set.empty()) throw Error(ErrorCode::kInvalidArgument, "empty set");
  std::vector<Int> elements;
  for (const auto& x : set) {
    Int c = ring.canonical(x);
    if (std::find(elements.begin(), elements.end(), c) != elements.end()) {
      throw Error(ErrorCode::kInvalidArgument, "repeated element " + c.str());
    }
    elements.push_back(c);
  }
  std::size_t support = elements.size();
  if (degree) {
    if (*degree >= elements.size()) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "|S| = " + std::to_string(elements.size()) + " does not exceed d = " +
                      std::to_string(*degree));
    }
    support = *degree + 1;
  }
  Multipliers out{ring, elements, std::vector<Int>(elements.size(), Int(0)), support - 1};
  for (std::size_t j = 0; j < support; ++j) {
    Int denom = 1;
    for (std::size_t k = 0; k < support; ++k) {
      if (k != j) denom = ring.mul(denom, ring.sub(elements[j], elements[k]));
    }
    out.weights[j] = ring.inverse(denom);
  }
  if (!out.check()) {
    throw Error(ErrorCode::kInvalidArgument, "multipliers failed the moment check");
  }
  return out;
}

namespace {

struct WeightTables {
  std::vector<std::vector<Int>> weights;
  std::uint64_t points = 0;
};

WeightTables prepare(const std::vector<Int>& values, const GridSpec& grid, const Exponents& d) {
  const auto& ring = grid.ring();
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupportedRing,
                "the coefficient formula needs a prime field, got " + ring.to_string());
  }
  if (d.size() != grid.arity()) throw Error(ErrorCode::kArityMismatch, "d has the wrong length");
  WeightTables t;
  t.points = detail::checked_point_count(grid, 100'000'000);
  if (values.size() != t.points) {
    throw Error(ErrorCode::kInvalidArgument, "value table has " + std::to_string(values.size()) +
                                                 " entries for a grid of " +
                                                 std::to_string(t.points) + " points");
  }
  for (std::size_t i = 0; i < grid.arity(); ++i) {
    t.weights.push_back(vandermonde_multipliers(ring, grid.set(i), d[i]).weights);
  }
  return t;
}

Int weighted_sum(const std::vector<Int>& values, const GridSpec& grid, const WeightTables& t,
                 std::uint64_t begin, std::uint64_t end) {
  const auto& ring = grid.ring();
  std::vector<std::size_t> digits(grid.arity());
  grid.decode(begin, digits);
  Int sum = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    Int term = ring.canonical(values[idx]);
    for (std::size_t i = 0; i < digits.size() && term != 0; ++i) {
      term = ring.mul(term, t.weights[i][digits[i]]);
    }
    sum = ring.add(sum, term);
    detail::advance(digits, grid);
  }
  return sum;
}

}  // namespace

RingElem coefficient_via_grid_serial(const std::vector<Int>& values, const GridSpec& grid,
                                     const Exponents& d) {
  auto tables = prepare(values, grid, d);
  return RingElem(grid.ring(), weighted_sum(values, grid, tables, 0, tables.points));
}

RingElem coefficient_via_grid(const std::vector<Int>& values, const GridSpec& grid,
                              const Exponents& d) {
  auto tables = prepare(values, grid, d);
  std::vector<Int> partial(thread_count() + 1, Int(0));
  int blocks = parallel_blocks(tables.points, [&](std::uint64_t begin, std::uint64_t end, int b) {
    partial[b] = weighted_sum(values, grid, tables, begin, end);
  });
  // Field addition is exact, so the block order does not affect the result.
  Int sum = 0;
  for (int b = 0; b < blocks; ++b) sum = grid.ring().add(sum, partial[b]);
  return RingElem(grid.ring(), sum);
}

}  // namespace cnz

#include "grid_eval.hpp"

#include <algorithm>

#include "cnz/error.hpp"

namespace cnz::detail {
namespace {

void check_match(const Polynomial& f, const GridSpec& grid) {
  if (!(f.ring() == grid.ring())) {
    throw Error(ErrorCode::kRingMismatch, "polynomial over " + f.ring().to_string() +
                                              ", grid over " + grid.ring().to_string());
  }
  if (f.arity() != grid.arity()) {
    throw Error(ErrorCode::kArityMismatch, "polynomial of arity " + std::to_string(f.arity()) +
                                               ", grid of arity " + std::to_string(grid.arity()));
  }
}

std::vector<std::uint32_t> max_exponents(const Polynomial& f) {
  std::vector<std::uint32_t> out(f.arity(), 0);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

}  // namespace

ModularEvaluator::ModularEvaluator(const Polynomial& f, const GridSpec& grid)
    : mod_(f.ring().modulus()), arity_(f.arity()) {
  check_match(f, grid);
  for (const auto& [e, c] : f.terms()) {
    coef_.push_back(static_cast<std::uint64_t>(c));
    exps_.insert(exps_.end(), e.begin(), e.end());
  }
  auto top = max_exponents(f);
  for (std::size_t i = 0; i < arity_; ++i) {
    stride_.push_back(top[i] + 1);
    std::vector<std::uint64_t> table;
    table.reserve(grid.size(i) * stride_[i]);
    for (const auto& x : grid.set(i)) {
      std::uint64_t base = static_cast<std::uint64_t>(x);
      std::uint64_t p = 1 % mod_;
      for (std::uint32_t k = 0; k <= top[i]; ++k) {
        table.push_back(p);
        p = mulmod(p, base);
      }
    }
    powers_.push_back(std::move(table));
  }
}

IntegerEvaluator::IntegerEvaluator(const Polynomial& f, const GridSpec& grid) : arity_(f.arity()) {
  check_match(f, grid);
  for (const auto& [e, c] : f.terms()) {
    coef_.push_back(c);
    exps_.insert(exps_.end(), e.begin(), e.end());
  }
  auto top = max_exponents(f);
  for (std::size_t i = 0; i < arity_; ++i) {
    stride_.push_back(top[i] + 1);
    std::vector<Int> table;
    for (const auto& x : grid.set(i)) {
      Int p = 1;
      for (std::uint32_t k = 0; k <= top[i]; ++k) {
        table.push_back(p);
        p *= x;
      }
    }
    powers_.push_back(std::move(table));
  }
}

Int IntegerEvaluator::value_int(std::span<const std::size_t> digits) const {
  Int acc = 0;
  Int term;
  const std::uint32_t* e = exps_.data();
  for (std::size_t t = 0; t < coef_.size(); ++t, e += arity_) {
    term = coef_[t];
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term *= powers_[i][digits[i] * stride_[i] + e[i]];
    }
    acc += term;
  }
  return acc;
}

std::uint64_t checked_point_count(const GridSpec& grid, std::uint64_t limit) {
  Int count = grid.point_count();
  if (count > limit) {
    throw Error(ErrorCode::kResourceLimit,
                "grid has " + count.str() + " points, limit is " + std::to_string(limit));
  }
  return static_cast<std::uint64_t>(count);
}

}  // namespace cnz::detail

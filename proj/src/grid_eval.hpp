#pragma once

// Evaluation of a fixed polynomial at grid points, with per-variable power
// tables built once. Modular rings use 64-bit arithmetic; Z uses Int.

#include <cstdint>
#include <span>
#include <vector>

#include "cnz/grid.hpp"
#include "cnz/poly.hpp"

namespace cnz::detail {

class ModularEvaluator {
 public:
  ModularEvaluator(const Polynomial& f, const GridSpec& grid);

  std::uint64_t value(std::span<const std::size_t> digits) const {
    std::uint64_t acc = 0;
    const std::uint32_t* e = exps_.data();
    for (std::size_t t = 0; t < coef_.size(); ++t, e += arity_) {
      std::uint64_t term = coef_[t];
      for (std::size_t i = 0; i < arity_; ++i) {
        if (e[i] != 0) term = mulmod(term, powers_[i][digits[i] * stride_[i] + e[i]]);
      }
      acc += term;
      if (acc >= mod_) acc -= mod_;
    }
    return acc;
  }

  bool is_zero(std::span<const std::size_t> digits) const { return value(digits) == 0; }
  Int value_int(std::span<const std::size_t> digits) const { return Int(value(digits)); }

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod_);
  }

  std::uint64_t mod_;
  std::size_t arity_;
  std::vector<std::uint64_t> coef_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<std::uint64_t>> powers_;
};

class IntegerEvaluator {
 public:
  IntegerEvaluator(const Polynomial& f, const GridSpec& grid);

  Int value_int(std::span<const std::size_t> digits) const;
  bool is_zero(std::span<const std::size_t> digits) const { return value_int(digits) == 0; }

 private:
  std::size_t arity_;
  std::vector<Int> coef_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<Int>> powers_;
};

/// Calls body(evaluator) with the evaluator suited to the ring.
template <class Body>
decltype(auto) with_evaluator(const Polynomial& f, const GridSpec& grid, Body&& body) {
  if (f.ring().is_modular()) return body(ModularEvaluator(f, grid));
  return body(IntegerEvaluator(f, grid));
}

/// Advances odometer digits (last variable fastest).
inline void advance(std::span<std::size_t> digits, const GridSpec& grid) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < grid.size(i)) return;
    digits[i] = 0;
  }
}

/// Throws kResourceLimit if the grid exceeds `limit` points; returns the count.
std::uint64_t checked_point_count(const GridSpec& grid, std::uint64_t limit);

}  // namespace cnz::detail

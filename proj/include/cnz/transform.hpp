#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cnz/grid.hpp"
#include "cnz/poly.hpp"

namespace cnz {

/// Reduces f modulo prod_{a in S_i}(x_i - a) for every i, in ascending
/// variable order. The result agrees with f on the grid, has degree < |S_i|
/// in x_i, and keeps the coefficient of every maximal monomial e of f with
/// e_i < |S_i|. Requires the grid condition.
Polynomial trim(const Polynomial& f, const GridSpec& grid);

/// Weights g on a finite set S of a prime field with
///   sum_x g(x) x^k = 0 for k < m - 1 and = 1 for k = m - 1,
/// where m = |S'| and S' is S (or its first d + 1 elements when a degree d
/// is given; g vanishes off S').
struct Multipliers {
  RingSpec ring;
  std::vector<Int> elements;
  std::vector<Int> weights;
  /// Degree whose moment is 1, i.e. |S'| - 1.
  std::uint64_t degree = 0;

  /// sum_x g(x) x^k.
  Int moment(std::uint64_t k) const;
  /// Moments 0..degree are 0, ..., 0, 1.
  bool check() const;
};

/// g(a_j) = 1 / prod_{k != j} (a_j - a_k) over the chosen subset; checked by
/// substitution before returning.
Multipliers vandermonde_multipliers(RingSpec ring, const std::vector<Int>& set,
                                    std::optional<std::uint64_t> degree = std::nullopt);

/// sum over the grid of f(x) * prod_i g_{S_i, d_i}(x_i), with f given by its
/// values in odometer order. Equals the coefficient of x^d in f whenever x^d
/// is a maximal monomial of f (or absent with nothing above it).
RingElem coefficient_via_grid(const std::vector<Int>& values, const GridSpec& grid,
                              const Exponents& d);

/// Same sum, serial reference.
RingElem coefficient_via_grid_serial(const std::vector<Int>& values, const GridSpec& grid,
                                     const Exponents& d);

}  // namespace cnz

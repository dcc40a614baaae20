#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cnz/bounds.hpp"
#include "cnz/grid.hpp"
#include "cnz/poly.hpp"

namespace cnz {

struct CountOptions {
  /// Larger grids are rejected with kResourceLimit.
  std::uint64_t grid_limit = 100'000'000;
  bool collect_zeros = false;
  /// Zero sets are only returned for grids up to this many points.
  std::uint64_t zero_set_cap = 1'000'000;
};

struct CountResult {
  std::uint64_t nonzeros = 0;
  std::uint64_t zeros = 0;
  /// Linear grid indices of the zeros, ascending (odometer order).
  std::optional<std::vector<std::uint64_t>> zero_indices;
};

/// Exhaustive count over the whole grid, OpenMP-parallel. Results do not
/// depend on the thread count.
CountResult count_nonzeros(const Polynomial& f, const GridSpec& grid,
                           const CountOptions& options = {});

/// Single-threaded reference implementation of count_nonzeros.
CountResult count_nonzeros_serial(const Polynomial& f, const GridSpec& grid,
                                  const CountOptions& options = {});

/// Values of f at every grid point in odometer order.
std::vector<Int> tabulate(const Polynomial& f, const GridSpec& grid,
                          std::uint64_t grid_limit = CountOptions{}.grid_limit);

struct BoundCheck {
  BoundReport bound;
  /// Unset for entries that cannot be compared with a count (exponents).
  std::optional<bool> sound;
  /// nonzeros - value for count bounds, value - zero fraction otherwise.
  Rational slack = 0;
};

struct VerificationReport {
  std::uint64_t nonzero_count = 0;
  std::uint64_t zero_count = 0;
  std::uint64_t grid_size = 0;
  bool grid_condition = true;
  std::vector<BoundCheck> per_bound;
};

/// Counts f on the grid and checks every applicable bound against the count.
/// Bounds whose assumptions fail (nonzero on grid, grid condition) are
/// downgraded to uncertified.
VerificationReport verify_bounds(const Polynomial& f, const GridSpec& grid,
                                 const CountOptions& options = {});

/// prod_i prod_{a in A_i} (x_i - a); A_i defaults to the first d_i elements
/// of S_i.
Polynomial tightness_family(const GridSpec& grid, const Exponents& d,
                            const std::optional<std::vector<std::vector<Int>>>& subsets = {});

struct MinNonzeroResult {
  std::uint64_t min_count = 0;
  Polynomial witness;
  bool exhaustive = true;
  std::uint64_t candidates = 0;
};

/// Smallest nonzero count over polynomials supported on `support` whose
/// coefficient at `required` is nonzero. Over a field the zero set is
/// invariant under scaling, so the required coefficient is fixed to 1 and
/// the remaining coefficients range over F_p. Spaces larger than `budget`
/// are sampled (`seed`) and reported as non-exhaustive.
MinNonzeroResult min_nonzero_search(const std::vector<Exponents>& support,
                                    const Exponents& required, const GridSpec& grid,
                                    std::uint64_t budget = 10'000'000, std::uint64_t seed = 1);

/// Reproducible random sparse polynomial: each monomial under the caps is
/// kept with probability `density`, with a uniformly random nonzero
/// coefficient (|c| <= 10 over Z).
Polynomial random_polynomial(std::size_t arity, const Exponents& caps, double density,
                             RingSpec ring, std::uint64_t seed);

}  // namespace cnz

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnz/analysis.hpp"
#include "cnz/grid.hpp"
#include "cnz/poly.hpp"

namespace cnz {

using Sizes = std::vector<std::uint64_t>;

enum class BoundKind {
  kNonzeroCount,     // lower bound on the number of nonzeros
  kZeroProbability,  // upper bound on the fraction of zeros
  kZeroDensity,      // asymptotic upper bound on the fraction of zeros
  kExponent,         // growth exponent only
};

const char* to_string(BoundKind kind);

struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::kNonzeroCount;
  /// Exact value; for kZeroDensity a rational approximation of `approx`.
  Rational value = 0;
  std::optional<double> approx;
  std::string assumptions;
  std::optional<Exponents> witness_d;
  std::optional<Exponents> witness_e;
  std::optional<VariableOrder> order;
  /// The hypothesis of the bound is certified for the polynomial and grid.
  bool certified = false;
  bool asymptotic = false;
  /// Valid only if f has at least one nonzero on the grid.
  bool requires_nonzero_on_grid = false;
};

/// prod (|S_i| - d_i).
Int product_bound(std::span<const std::uint64_t> sizes, const Exponents& d);

/// ceil(prod |S_i| * (1 - sum d_i / |S_i|)), clamped at 0.
Int schwartz_additive_bound(std::span<const std::uint64_t> sizes, const Exponents& d);

/// d / s, the zero probability bound for total degree d.
Rational sz_probability(std::uint64_t total_degree, std::uint64_t s);

/// (s - d)^n. Zippel reads d as a per-variable bound, DeMillo-Lipton as the
/// total degree; the numbers coincide.
Int zippel_bound(std::uint64_t s, std::uint64_t d, std::uint64_t n);
Int demillo_lipton_bound(std::uint64_t s, std::uint64_t d, std::uint64_t n);

/// 1 + sum (|S_i| - d_i - 1).
Int additive_existence_bound(std::span<const std::uint64_t> sizes, const Exponents& d);

struct AFInstance {
  Sizes sizes;
  Exponents caps;
  std::uint64_t total = 0;
};

struct ProductMinimum {
  Int value;
  std::vector<std::uint64_t> argmin;
};

enum class SumConstraint { kEqual, kAtLeast };

/// Minimum of prod y_i over integers lower_i <= y_i <= upper_i with
/// sum y_i = target (or >= target). Dynamic programming over
/// (variable, remaining sum). Ties go to the lexicographically largest y.
/// Returns nullopt when infeasible.
std::optional<ProductMinimum> minimize_product(std::span<const std::uint64_t> lower,
                                               std::span<const std::uint64_t> upper,
                                               std::uint64_t target, SumConstraint constraint);

/// Generalized Alon-Furedi bound: y_i in [|S_i| - d_i, |S_i|],
/// sum y_i = sum |S_i| - d.
ProductMinimum gen_alon_furedi_bound(const AFInstance& inst,
                                     SumConstraint constraint = SumConstraint::kEqual);

/// Original Alon-Furedi bound: y_i in [1, |S_i|], sum y_i >= sum |S_i| - d,
/// solved greedily by filling the largest sets first.
ProductMinimum alon_furedi_original_bound(std::span<const std::uint64_t> sizes, std::uint64_t d);

/// (3n)^n / s^{1/l^{n-1}}. Only meaningful beyond an unspecified threshold.
double erdos_density_bound(std::uint64_t n, std::uint64_t l, std::uint64_t s);

/// 2 - 1/(min(d1, d2) + 1).
Rational kst_exponent(std::uint64_t d1, std::uint64_t d2);

Int ceil(const Rational& q);

/// Every bound whose hypothesis can be read off the polynomial and grid,
/// plus uncertified reference entries (product bound at a maximal monomial,
/// asymptotic density and exponent).
std::vector<BoundReport> applicable_bounds(const Polynomial& f, const GridSpec& grid);

}  // namespace cnz

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cnz/poly.hpp"

namespace cnz {

/// Rows a (distinct) with offsets u, columns b (distinct) with offsets v.
/// Cell (i, j) agrees when a_i * b_j == u_i + v_j.
struct PuzzleInstance {
  std::vector<std::int64_t> a, b, u, v;

  std::size_t size() const { return a.size(); }
  /// Throws kInvalidArgument on length mismatch, repeated a or b entries,
  /// or entries above kMaxPuzzleEntry in magnitude.
  void validate() const;
};

inline constexpr std::int64_t kMaxPuzzleEntry = 1'000'000'000;

struct AgreementPattern {
  std::size_t s = 0;
  /// Row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> cells;

  std::size_t count() const { return cells.size(); }
};

AgreementPattern agreement_count(const PuzzleInstance& inst);

/// Multiplication and addition tables, row-major.
std::vector<std::vector<std::int64_t>> product_table(const PuzzleInstance& inst);
std::vector<std::vector<std::int64_t>> sum_table(const PuzzleInstance& inst);

/// Instance whose agreements are the zeros of -xy + P(x) + Q(y) on a x b,
/// given c_i = P(a_i) and d_j = Q(b_j).
PuzzleInstance from_polynomial(std::vector<std::int64_t> a, std::vector<std::int64_t> c,
                               std::vector<std::int64_t> b, std::vector<std::int64_t> d);
/// Same, evaluating univariate integer polynomials P and Q.
PuzzleInstance from_polynomial(const std::vector<std::int64_t>& a, const Polynomial& p,
                               const std::vector<std::int64_t>& b, const Polynomial& q);

/// True iff no two rows share two columns.
bool k22_check(const AgreementPattern& pattern);

/// Largest edge count of a K2,2-free bipartite graph on s + s vertices
/// allowed by the counting bound floor(s (1 + sqrt(4s - 3)) / 2).
std::uint64_t k22_free_edge_bound(std::uint64_t s);

struct ExhaustiveResult {
  PuzzleInstance best;
  std::size_t count = 0;
  /// Number of (a, b, u) tuples examined.
  std::uint64_t candidates = 0;
};

/// Exact maximum over a, b, u in [-R, R] (a, b distinct) and v unrestricted.
/// Searches translates with a_1 = 0 and u_1 = 0, a and b ascending, and picks
/// each v_j as the most frequent a_i b_j - u_i; the reported instance is
/// shifted back so that a, b, u lie in [-R, R]. Throws kResourceLimit when
/// the candidate count exceeds `budget`.
ExhaustiveResult exhaustive_search(std::size_t s, std::int64_t range,
                                   std::uint64_t budget = 100'000'000);

struct LocalSearchStep {
  std::uint64_t step = 0;
  std::uint64_t restart = 0;
  std::size_t count = 0;
};

struct LocalSearchResult {
  PuzzleInstance best;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
  /// Every improvement of the global best, in step order.
  std::vector<LocalSearchStep> history;
};

inline constexpr std::uint64_t kRestartPatience = 1000;

/// Hill climbing with sideways moves. Moves: +-1 on one entry, resample one
/// entry, swap two entries of one sequence. A restart begins after
/// kRestartPatience steps without improving that restart's best. Results
/// do not depend on the thread count.
LocalSearchResult local_search(std::size_t s, std::uint64_t budget, std::uint64_t seed);

}  // namespace cnz

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cnz/grid.hpp"
#include "cnz/parser.hpp"

namespace cnz {

/// Value of the expression at a point; every node is evaluated once.
Int eval_dag(const ExprDag& dag, std::span<const Int> point);
RingElem eval_dag(const ExprDag& dag, const std::vector<RingElem>& point);

/// Structural upper bound on the total degree (saturates at UINT64_MAX).
std::uint64_t degree_upper_bound(const ExprDag& dag);

struct PitVerdict {
  enum class Kind { kNonzeroWitnessed, kAllZero };

  Kind kind = Kind::kAllZero;
  /// Witness point and the nonzero value of g1 - g2 there.
  std::vector<Int> point;
  Int value = 0;
  /// Zero-based index of the witnessing trial.
  std::uint64_t witness_trial = 0;
  std::uint64_t trials = 0;
  /// (d / s)^trials, reported for kAllZero.
  Rational failure_bound = 0;
  std::uint64_t degree_bound_used = 0;
  std::uint64_t samples_per_var = 0;
  std::uint64_t seed = 0;
};

/// Randomized identity test of g1 == g2 over F_p: `trials` points drawn
/// uniformly from S^n with S = {0, ..., s - 1}. Requires p >= s and a
/// structural degree bound d < s. Deterministic for a given seed; the
/// lowest-index witnessing trial is reported.
PitVerdict identity_test(const ExprDag& g1, const ExprDag& g2, std::uint64_t samples_per_var,
                         std::uint64_t trials, std::uint64_t seed);

struct DagCount {
  std::uint64_t zeros = 0;
  std::uint64_t points = 0;
};

/// Exhaustive zero count of the expression over the grid (OpenMP).
DagCount count_dag_zeros(const ExprDag& dag, const GridSpec& grid);
/// Serial reference.
DagCount count_dag_zeros_serial(const ExprDag& dag, const GridSpec& grid);

/// The grid {0, ..., s - 1}^n over the DAG's ring.
GridSpec sample_grid(const ExprDag& dag, std::uint64_t samples_per_var);

}  // namespace cnz

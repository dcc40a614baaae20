#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cnz/poly.hpp"

namespace cnz {

/// A variable order: order[k] is the variable considered k-th.
using VariableOrder = std::vector<std::size_t>;

VariableOrder identity_order(std::size_t arity);
/// All n! orders in lexicographic order of the permutation.
std::vector<VariableOrder> all_orders(std::size_t arity);

enum class ConditionKind {
  kMaximalMonomial,
  kLexLargest,
  kSuccessivelyLargest,
  kDLeading,
  kPartialDegrees,
  kTotalDegree,
};

const char* to_string(ConditionKind kind);

/// A hypothesis on the monomials of f. The order is used by the
/// order-dependent kinds (lex-largest, successively largest).
struct Condition {
  ConditionKind kind;
  VariableOrder order;
};

struct HypothesisReport {
  Condition condition;
  Exponents witness_d;
  /// Seed monomial for successively-largest and d-leading reports.
  std::optional<Exponents> witness_e;
  bool holds = false;
};

/// Monomials of f not dividing any other monomial of f, in graded-lex order.
std::vector<Exponents> maximal_monomials(const Polynomial& f);

/// Lexicographically largest monomial under `order` (original coordinates).
Exponents lex_largest(const Polynomial& f, const VariableOrder& order);

/// d_j = max { a_j : a in supp(f), a_i = e_i for every i before j in `order` }.
Exponents successively_largest(const Polynomial& f, const Exponents& seed,
                               const VariableOrder& order);

/// True iff no monomial e' != e of f has e'_i = e_i or e'_i > d_i for all i.
bool is_d_leading(const Polynomial& f, const Exponents& e, const Exponents& d);

/// The exponent vectors in [0, cap]^n that a polynomial may not contain if the
/// named condition is to hold with witness (d, e).
std::vector<Exponents> forbidden_set(const Condition& condition, const Exponents& d,
                                     const std::optional<Exponents>& e, const Exponents& cap);

/// Membership test behind forbidden_set, usable without a cap box.
bool is_forbidden(const Condition& condition, const Exponents& d,
                  const std::optional<Exponents>& e, const Exponents& candidate);

/// Re-checks a report against its definition: the required monomial is
/// present and no monomial of f lies in the forbidden region.
bool witness_holds(const Polynomial& f, const Condition& condition, const Exponents& d,
                   const std::optional<Exponents>& e);

/// The componentwise-minimal d >= e for which e is d-leading. Empty when e
/// is not in f or the candidate grid exceeds `limit` points.
std::vector<Exponents> minimal_leading_degrees(const Polynomial& f, const Exponents& e,
                                               std::uint64_t limit = 100'000);

/// Reports for every condition. Order-dependent conditions are evaluated for
/// all n! orders when n <= 4, otherwise for the identity order only.
std::vector<HypothesisReport> classify(const Polynomial& f);

inline constexpr std::size_t kMaxArityForAllOrders = 4;

}  // namespace cnz

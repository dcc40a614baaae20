#include "cnz/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cnz/error.hpp"

namespace cnz {
namespace {

void require_nonzero(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kUndefinedDegree, "zero polynomial has no monomials");
}

void require_order(const VariableOrder& order, std::size_t arity) {
  VariableOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_order(arity)) {
    throw Error(ErrorCode::kInvalidArgument, "variable order is not a permutation");
  }
}

// a >= b componentwise.
bool dominates(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

bool lex_greater(const Exponents& a, const Exponents& b, const VariableOrder& order) {
  for (auto v : order) {
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

void append_box(const Exponents& cap, std::vector<Exponents>& out, const auto& keep) {
  Exponents e(cap.size(), 0);
  while (true) {
    if (keep(e)) out.push_back(e);
    std::size_t i = cap.size();
    while (i > 0) {
      --i;
      if (e[i] < cap[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
      if (i == 0) return;
    }
    if (cap.empty()) return;
  }
}

}  // namespace

VariableOrder identity_order(std::size_t arity) {
  VariableOrder order(arity);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

std::vector<VariableOrder> all_orders(std::size_t arity) {
  std::vector<VariableOrder> out;
  auto order = identity_order(arity);
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

const char* to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::kMaximalMonomial: return "maximal_monomial";
    case ConditionKind::kLexLargest: return "lex_largest";
    case ConditionKind::kSuccessivelyLargest: return "successively_largest";
    case ConditionKind::kDLeading: return "d_leading";
    case ConditionKind::kPartialDegrees: return "partial_degrees";
    case ConditionKind::kTotalDegree: return "total_degree";
  }
  return "?";
}

std::vector<Exponents> maximal_monomials(const Polynomial& f) {
  require_nonzero(f);
  std::vector<Exponents> out;
  for (const auto& [e, c] : f.terms()) {
    bool maximal = true;
    for (const auto& [other, oc] : f.terms()) {
      if (other != e && dominates(other, e)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(e);
  }
  return out;
}

Exponents lex_largest(const Polynomial& f, const VariableOrder& order) {
  require_nonzero(f);
  require_order(order, f.arity());
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best || lex_greater(e, *best, order)) best = &e;
  }
  return *best;
}

Exponents successively_largest(const Polynomial& f, const Exponents& seed,
                               const VariableOrder& order) {
  require_order(order, f.arity());
  if (!f.contains(seed)) {
    throw Error(ErrorCode::kHypothesisViolation, "seed is not a monomial of the polynomial");
  }
  // Walk the coefficient chain f_1 = f, f_j = coefficient of x^{e} in f_{j-1}:
  // the live monomials are those agreeing with the seed on earlier variables.
  Exponents d(f.arity(), 0);
  std::vector<const Exponents*> live;
  for (const auto& [e, c] : f.terms()) live.push_back(&e);
  for (auto v : order) {
    for (const auto* e : live) d[v] = std::max(d[v], (*e)[v]);
    std::erase_if(live, [&](const Exponents* e) { return (*e)[v] != seed[v]; });
  }
  return d;
}

bool is_d_leading(const Polynomial& f, const Exponents& e, const Exponents& d) {
  if (e.size() != f.arity() || d.size() != f.arity()) {
    throw Error(ErrorCode::kArityMismatch, "exponent vectors do not match the arity");
  }
  if (!f.contains(e)) throw Error(ErrorCode::kHypothesisViolation, "e is not a monomial of f");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > d[i]) throw Error(ErrorCode::kHypothesisViolation, "e exceeds d");
  }
  Condition cond{ConditionKind::kDLeading, {}};
  for (const auto& [other, c] : f.terms()) {
    if (is_forbidden(cond, d, e, other)) return false;
  }
  return true;
}

bool is_forbidden(const Condition& condition, const Exponents& d,
                  const std::optional<Exponents>& e, const Exponents& x) {
  std::size_t n = d.size();
  switch (condition.kind) {
    case ConditionKind::kMaximalMonomial:
      return x != d && dominates(x, d);
    case ConditionKind::kLexLargest:
      return lex_greater(x, d, condition.order);
    case ConditionKind::kSuccessivelyLargest: {
      for (auto v : condition.order) {
        if (x[v] > d[v]) return true;
        if (x[v] != (*e)[v]) return false;
      }
      return false;
    }
    case ConditionKind::kDLeading: {
      if (x == *e) return false;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != (*e)[i] && x[i] <= d[i]) return false;
      }
      return true;
    }
    case ConditionKind::kPartialDegrees:
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > d[i]) return true;
      }
      return false;
    case ConditionKind::kTotalDegree:
      return total_degree(x) > total_degree(d);
  }
  return false;
}

namespace {

void validate_condition(const Condition& condition, const Exponents& d,
                        const std::optional<Exponents>& e) {
  bool needs_seed = condition.kind == ConditionKind::kSuccessivelyLargest ||
                    condition.kind == ConditionKind::kDLeading;
  if (needs_seed && !e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(condition.kind)) + " needs a seed monomial e");
  }
  if (e && e->size() != d.size()) {
    throw Error(ErrorCode::kArityMismatch, "e and d have different lengths");
  }
  bool needs_order = condition.kind == ConditionKind::kLexLargest ||
                     condition.kind == ConditionKind::kSuccessivelyLargest;
  if (needs_order) require_order(condition.order, d.size());
}

}  // namespace

std::vector<Exponents> forbidden_set(const Condition& condition, const Exponents& d,
                                     const std::optional<Exponents>& e, const Exponents& cap) {
  validate_condition(condition, d, e);
  if (cap.size() != d.size()) throw Error(ErrorCode::kArityMismatch, "cap has the wrong length");
  std::vector<Exponents> out;
  append_box(cap, out, [&](const Exponents& x) { return is_forbidden(condition, d, e, x); });
  return out;
}

bool witness_holds(const Polynomial& f, const Condition& condition, const Exponents& d,
                   const std::optional<Exponents>& e) {
  validate_condition(condition, d, e);
  switch (condition.kind) {
    case ConditionKind::kMaximalMonomial:
    case ConditionKind::kLexLargest:
    case ConditionKind::kTotalDegree:
      if (!f.contains(d)) return false;
      break;
    case ConditionKind::kSuccessivelyLargest:
      if (!f.contains(*e)) return false;
      break;
    case ConditionKind::kDLeading:
      if (!f.contains(*e)) return false;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if ((*e)[i] > d[i]) return false;
      }
      break;
    case ConditionKind::kPartialDegrees:
      break;
  }
  for (const auto& [x, c] : f.terms()) {
    if (is_forbidden(condition, d, e, x)) return false;
  }
  return true;
}

std::vector<Exponents> minimal_leading_degrees(const Polynomial& f, const Exponents& e,
                                              std::uint64_t limit) {
  if (!f.contains(e)) return {};
  std::size_t n = e.size();
  // Validity depends on d_i only through the thresholds e'_i <= d_i, so the
  // minimal d lie on the grid of these values.
  std::vector<std::vector<std::uint32_t>> values(n);
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::uint32_t> v{e[i]};
    for (const auto& [other, c] : f.terms()) {
      if (other[i] > e[i]) v.insert(other[i]);
    }
    values[i].assign(v.begin(), v.end());
    combos *= values[i].size();
    if (combos > limit) return {};
  }
  std::vector<Exponents> valid;
  std::vector<std::size_t> idx(n, 0);
  Exponents d(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) d[i] = values[i][idx[i]];
    if (is_d_leading(f, e, d)) valid.push_back(d);
    std::size_t i = 0;
    while (i < n && idx[i] + 1 == values[i].size()) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
  std::vector<Exponents> out;
  for (const auto& cand : valid) {
    bool minimal = std::none_of(valid.begin(), valid.end(), [&](const Exponents& other) {
      return other != cand && dominates(cand, other);
    });
    if (minimal) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HypothesisReport> classify(const Polynomial& f) {
  require_nonzero(f);
  std::size_t n = f.arity();
  auto orders = n <= kMaxArityForAllOrders ? all_orders(n) : std::vector<VariableOrder>{identity_order(n)};
  auto support = f.support();
  auto maximal = maximal_monomials(f);
  auto degrees = f.degrees();
  std::vector<HypothesisReport> out;

  auto report = [&](ConditionKind kind, VariableOrder order, Exponents d,
                    std::optional<Exponents> e) {
    Condition cond{kind, std::move(order)};
    bool holds = witness_holds(f, cond, d, e);
    out.push_back({std::move(cond), std::move(d), std::move(e), holds});
  };

  for (const auto& m : maximal) report(ConditionKind::kMaximalMonomial, {}, m, std::nullopt);
  for (const auto& order : orders) {
    report(ConditionKind::kLexLargest, order, lex_largest(f, order), std::nullopt);
  }
  for (const auto& order : orders) {
    for (const auto& e : support) {
      report(ConditionKind::kSuccessivelyLargest, order, successively_largest(f, e, order), e);
    }
  }
  for (const auto& e : support) {
    std::set<Exponents> candidates;
    if (std::find(maximal.begin(), maximal.end(), e) != maximal.end()) candidates.insert(e);
    for (const auto& order : orders) candidates.insert(successively_largest(f, e, order));
    for (auto& d : minimal_leading_degrees(f, e)) candidates.insert(std::move(d));
    for (const auto& d : candidates) report(ConditionKind::kDLeading, {}, d, e);
  }
  report(ConditionKind::kPartialDegrees, {}, degrees.partial, std::nullopt);
  for (const auto& e : support) {
    if (total_degree(e) == degrees.total) report(ConditionKind::kTotalDegree, {}, e, std::nullopt);
  }
  return out;
}

}  // namespace cnz

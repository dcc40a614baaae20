#include "cnz/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cnz/error.hpp"

namespace cnz {

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto ta = total_degree(a);
  auto tb = total_degree(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

Polynomial Polynomial::constant(RingSpec ring, std::size_t arity, const Int& value) {
  Polynomial p(ring, arity);
  p.add_term(Exponents(arity, 0), value);
  return p;
}

Polynomial Polynomial::variable(RingSpec ring, std::size_t arity, std::size_t index) {
  if (index >= arity) {
    throw Error(ErrorCode::kInvalidArgument, "variable index " + std::to_string(index) +
                                                 " out of range for arity " + std::to_string(arity));
  }
  Exponents e(arity, 0);
  e[index] = 1;
  Polynomial p(ring, arity);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(RingSpec ring, const Exponents& exps, const Int& coefficient) {
  Polynomial p(ring, exps.size());
  p.add_term(exps, coefficient);
  return p;
}

Int Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<Exponents> Polynomial::support() const {
  std::vector<Exponents> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void Polynomial::add_term(const Exponents& e, const Int& c) {
  if (e.size() != arity_) {
    throw Error(ErrorCode::kArityMismatch, "exponent vector of length " +
                                               std::to_string(e.size()) + " for arity " +
                                               std::to_string(arity_));
  }
  Int value = ring_.canonical(c);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, value);
  if (!inserted) {
    it->second = ring_.add(it->second, value);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw Error(ErrorCode::kRingMismatch,
                "polynomials over " + ring_.to_string() + " and " + other.ring_.to_string());
  }
  if (arity_ != other.arity_) {
    throw Error(ErrorCode::kArityMismatch, "polynomials of arity " + std::to_string(arity_) +
                                               " and " + std::to_string(other.arity_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, ring_.neg(c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.ring_, a.arity_);
  Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, a.ring_.mul(ca, cb));
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::scale(const Int& c) const {
  Int k = ring_.canonical(c);
  Polynomial out(ring_, arity_);
  if (k == 0) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, ring_.mul(v, k));
  return out;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, arity_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Int Polynomial::evaluate(std::span<const Int> point) const {
  if (point.size() != arity_) {
    throw Error(ErrorCode::kArityMismatch, "point of length " + std::to_string(point.size()) +
                                               " for arity " + std::to_string(arity_));
  }
  std::vector<Int> canon;
  canon.reserve(point.size());
  for (const auto& x : point) canon.push_back(ring_.canonical(x));
  Int sum = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term = ring_.mul(term, ring_.pow(canon[i], e[i]));
    }
    sum = ring_.add(sum, term);
  }
  return sum;
}

RingElem Polynomial::evaluate(const std::vector<RingElem>& point) const {
  std::vector<Int> values;
  values.reserve(point.size());
  for (const auto& x : point) {
    if (!(x.ring() == ring_)) {
      throw Error(ErrorCode::kRingMismatch, "point coordinate from " + x.ring().to_string());
    }
    values.push_back(x.value());
  }
  return RingElem(ring_, evaluate(values));
}

Degrees Polynomial::degrees() const {
  if (is_zero()) throw Error(ErrorCode::kUndefinedDegree, "degree of the zero polynomial");
  Degrees d;
  d.partial.assign(arity_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) d.partial[i] = std::max(d.partial[i], e[i]);
    d.total = std::max(d.total, total_degree(e));
  }
  return d;
}

std::vector<Polynomial> decompose_by_variable(const Polynomial& f, std::size_t var) {
  if (var >= f.arity()) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  if (f.is_zero()) throw Error(ErrorCode::kUndefinedDegree, "decomposing the zero polynomial");
  std::size_t degree = f.degrees().partial[var];
  std::vector<Polynomial> parts(degree + 1, Polynomial(f.ring(), f.arity()));
  for (const auto& [e, c] : f.terms()) {
    Exponents stripped = e;
    stripped[var] = 0;
    parts[e[var]].add_term(stripped, c);
  }
  return parts;
}

Polynomial recompose_by_variable(const std::vector<Polynomial>& parts, std::size_t var) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "no parts to recompose");
  Polynomial out(parts[0].ring(), parts[0].arity());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& [e, c] : parts[k].terms()) {
      if (e[var] != 0) throw Error(ErrorCode::kInvalidArgument, "part depends on the variable");
      Exponents shifted = e;
      shifted[var] = static_cast<std::uint32_t>(k);
      out.add_term(shifted, c);
    }
  }
  return out;
}

LinearDivision divide_linear(const Polynomial& f, std::size_t var, const Int& a) {
  if (var >= f.arity()) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  const auto& ring = f.ring();
  Polynomial zero(ring, f.arity());
  if (f.is_zero()) return {zero, zero};
  auto h = decompose_by_variable(f, var);
  if (h.size() == 1) return {zero, f};
  // Synthetic division by the monic (x_var - a), from the top coefficient down.
  Int root = ring.canonical(a);
  std::size_t d = h.size() - 1;
  std::vector<Polynomial> q(d, zero);
  q[d - 1] = h[d];
  for (std::size_t k = d - 1; k >= 1; --k) q[k - 1] = h[k] + q[k].scale(root);
  Polynomial r = h[0] + q[0].scale(root);
  return {recompose_by_variable(q, var), r};
}

Polynomial vanishing_poly(const GridSpec& grid, std::size_t var) {
  const auto& ring = grid.ring();
  std::size_t n = grid.arity();
  Polynomial x = Polynomial::variable(ring, n, var);
  Polynomial out = Polynomial::constant(ring, n, 1);
  for (const auto& a : grid.set(var)) out *= x - Polynomial::constant(ring, n, a);
  return out;
}

std::vector<std::string> default_variable_names(std::size_t arity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string render(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  auto vars = names.empty() ? default_variable_names(f.arity()) : names;
  if (vars.size() != f.arity()) {
    throw Error(ErrorCode::kArityMismatch, "wrong number of variable names for rendering");
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    bool negative = c < 0;
    Int magnitude = negative ? Int(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || magnitude != 1) factors.insert(factors.begin(), magnitude.str());
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

}  // namespace cnz

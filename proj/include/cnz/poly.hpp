#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cnz/grid.hpp"
#include "cnz/ring.hpp"

namespace cnz {

/// Exponents (a_1, ..., a_n) of a monomial x_1^{a_1} ... x_n^{a_n}.
using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

/// Graded lexicographic order, largest first: higher total degree first,
/// ties broken lexicographically with x_1 most significant.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Degrees {
  Exponents partial;
  std::uint64_t total = 0;
};

/// Sparse multivariate polynomial over a RingSpec. Stored coefficients are
/// canonical and never zero; the empty term map is the zero polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Int, GradedLexGreater>;

  Polynomial(RingSpec ring, std::size_t arity) : ring_(ring), arity_(arity) {}

  static Polynomial constant(RingSpec ring, std::size_t arity, const Int& value);
  static Polynomial variable(RingSpec ring, std::size_t arity, std::size_t index);
  static Polynomial monomial(RingSpec ring, const Exponents& exps, const Int& coefficient);

  const RingSpec& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Zero when the monomial is absent.
  Int coefficient(const Exponents& e) const;
  bool contains(const Exponents& e) const { return terms_.count(e) != 0; }
  /// Support in graded-lex order (largest first).
  std::vector<Exponents> support() const;

  /// Accumulates c into the coefficient of x^e, dropping a resulting zero.
  void add_term(const Exponents& e, const Int& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scale(const Int& c) const;
  Polynomial pow(std::uint64_t k) const;

  Int evaluate(std::span<const Int> point) const;
  RingElem evaluate(const std::vector<RingElem>& point) const;

  /// Partial and total degrees. Throws kUndefinedDegree on the zero polynomial.
  Degrees degrees() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& other) const;

  RingSpec ring_;
  std::size_t arity_;
  TermMap terms_;
};

struct LinearDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q * (x_var - a) + r with r free of x_var.
LinearDivision divide_linear(const Polynomial& f, std::size_t var, const Int& a);

/// h_0, ..., h_{d} with f = sum_k x_var^k h_k, each h_k free of x_var and
/// h_d nonzero (d = degree of f in x_var).
std::vector<Polynomial> decompose_by_variable(const Polynomial& f, std::size_t var);

/// Inverse of decompose_by_variable.
Polynomial recompose_by_variable(const std::vector<Polynomial>& parts, std::size_t var);

/// prod_{a in S_var} (x_var - a).
Polynomial vanishing_poly(const GridSpec& grid, std::size_t var);

/// Canonical rendering: graded-lex order, `^` for powers, explicit `*`.
/// Default variable names are x1..xn.
std::string render(const Polynomial& f, const std::vector<std::string>& names = {});

std::vector<std::string> default_variable_names(std::size_t arity);

}  // namespace cnz

#include "cnz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cnz/error.hpp"

namespace cnz {
namespace {

void check_sizes_exceed(std::span<const std::uint64_t> sizes, const Exponents& d) {
  if (sizes.size() != d.size()) {
    throw Error(ErrorCode::kArityMismatch, "sizes and degrees have different lengths");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sizes[i] <= d[i]) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "|S_" + std::to_string(i + 1) + "| = " + std::to_string(sizes[i]) +
                      " does not exceed d_" + std::to_string(i + 1) + " = " + std::to_string(d[i]));
    }
  }
}

void check_s_exceeds_d(std::uint64_t s, std::uint64_t d) {
  if (s <= d) {
    throw Error(ErrorCode::kHypothesisViolation,
                "|S| = " + std::to_string(s) + " does not exceed d = " + std::to_string(d));
  }
}

Int power(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(Int(base), static_cast<unsigned>(exp));
}

std::string vector_text(const Exponents& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kNonzeroCount: return "nonzero_count";
    case BoundKind::kZeroProbability: return "zero_probability";
    case BoundKind::kZeroDensity: return "zero_density";
    case BoundKind::kExponent: return "exponent";
  }
  return "?";
}

Int ceil(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int quot = num / den;  // truncates toward zero
  if (quot * den < num) ++quot;
  return quot;
}

Int product_bound(std::span<const std::uint64_t> sizes, const Exponents& d) {
  check_sizes_exceed(sizes, d);
  Int out = 1;
  for (std::size_t i = 0; i < d.size(); ++i) out *= sizes[i] - d[i];
  return out;
}

Int schwartz_additive_bound(std::span<const std::uint64_t> sizes, const Exponents& d) {
  check_sizes_exceed(sizes, d);
  Rational fraction = 1;
  Int grid = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    fraction -= Rational(d[i], sizes[i]);
    grid *= sizes[i];
  }
  Int value = ceil(Rational(grid) * fraction);
  return value < 0 ? Int(0) : value;
}

Rational sz_probability(std::uint64_t total, std::uint64_t s) {
  check_s_exceeds_d(s, total);
  return Rational(total, s);
}

Int zippel_bound(std::uint64_t s, std::uint64_t d, std::uint64_t n) {
  check_s_exceeds_d(s, d);
  return power(s - d, n);
}

Int demillo_lipton_bound(std::uint64_t s, std::uint64_t d, std::uint64_t n) {
  check_s_exceeds_d(s, d);
  return power(s - d, n);
}

Int additive_existence_bound(std::span<const std::uint64_t> sizes, const Exponents& d) {
  check_sizes_exceed(sizes, d);
  Int out = 1;
  for (std::size_t i = 0; i < d.size(); ++i) out += sizes[i] - d[i] - 1;
  return out;
}

std::optional<ProductMinimum> minimize_product(std::span<const std::uint64_t> lower,
                                               std::span<const std::uint64_t> upper,
                                               std::uint64_t target, SumConstraint constraint) {
  std::size_t n = lower.size();
  if (upper.size() != n) throw Error(ErrorCode::kArityMismatch, "bounds of different lengths");
  for (std::size_t i = 0; i < n; ++i) {
    if (lower[i] > upper[i]) return std::nullopt;
  }
  // best[i][r]: minimum product of y_i..y_{n-1} whose sum is r (kEqual) or at
  // least r (kAtLeast); -1 marks infeasible.
  std::vector<std::vector<Int>> best(n + 1, std::vector<Int>(target + 1, Int(-1)));
  best[n][0] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::uint64_t r = 0; r <= target; ++r) {
      Int& cell = best[i][r];
      for (std::uint64_t y = lower[i]; y <= upper[i]; ++y) {
        std::uint64_t rest;
        if (constraint == SumConstraint::kAtLeast) {
          rest = y >= r ? 0 : r - y;
        } else {
          if (y > r) break;
          rest = r - y;
        }
        const Int& tail = best[i + 1][rest];
        if (tail < 0) continue;
        Int candidate = tail * y;
        if (cell < 0 || candidate < cell) cell = candidate;
      }
    }
  }
  if (best[0][target] < 0) return std::nullopt;
  ProductMinimum out{best[0][target], {}};
  std::uint64_t r = target;
  Int remaining = out.value;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t y = upper[i] + 1; y-- > lower[i];) {
      std::uint64_t rest;
      if (constraint == SumConstraint::kAtLeast) {
        rest = y >= r ? 0 : r - y;
      } else {
        if (y > r) continue;
        rest = r - y;
      }
      const Int& tail = best[i + 1][rest];
      if (tail >= 0 && tail * y == remaining) {
        out.argmin.push_back(y);
        remaining = tail;
        r = rest;
        break;
      }
    }
  }
  return out;
}

ProductMinimum gen_alon_furedi_bound(const AFInstance& inst, SumConstraint constraint) {
  check_sizes_exceed(inst.sizes, inst.caps);
  std::uint64_t cap_sum = std::accumulate(inst.caps.begin(), inst.caps.end(), std::uint64_t{0});
  if (inst.total > cap_sum) {
    throw Error(ErrorCode::kHypothesisViolation,
                "total degree " + std::to_string(inst.total) + " exceeds the sum of the caps " +
                    std::to_string(cap_sum));
  }
  Sizes lower(inst.sizes.size());
  for (std::size_t i = 0; i < lower.size(); ++i) lower[i] = inst.sizes[i] - inst.caps[i];
  std::uint64_t target =
      std::accumulate(inst.sizes.begin(), inst.sizes.end(), std::uint64_t{0}) - inst.total;
  auto result = minimize_product(lower, inst.sizes, target, constraint);
  if (!result) throw Error(ErrorCode::kHypothesisViolation, "infeasible Alon-Furedi instance");
  return *result;
}

ProductMinimum alon_furedi_original_bound(std::span<const std::uint64_t> sizes, std::uint64_t d) {
  std::uint64_t slack = 0;
  for (auto s : sizes) {
    if (s == 0) throw Error(ErrorCode::kInvalidArgument, "empty set");
    slack += s - 1;
  }
  if (d > slack) {
    throw Error(ErrorCode::kHypothesisViolation,
                "d = " + std::to_string(d) + " exceeds sum(|S_i| - 1) = " + std::to_string(slack));
  }
  // Start from y = 1 and raise the largest sets to their upper bound until
  // the sum constraint is met.
  std::vector<std::size_t> by_size(sizes.size());
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  std::uint64_t need = slack - d;
  ProductMinimum out{1, std::vector<std::uint64_t>(sizes.size(), 1)};
  for (auto i : by_size) {
    std::uint64_t raise = std::min(need, sizes[i] - 1);
    out.argmin[i] += raise;
    need -= raise;
    out.value *= out.argmin[i];
  }
  return out;
}

double erdos_density_bound(std::uint64_t n, std::uint64_t l, std::uint64_t s) {
  if (n < 1 || l < 2 || s < 1) {
    throw Error(ErrorCode::kInvalidArgument, "erdos bound needs n >= 1, l >= 2, s >= 1");
  }
  long double numerator = std::pow(3.0L * n, static_cast<long double>(n));
  long double root = 1.0L / std::pow(static_cast<long double>(l), static_cast<long double>(n - 1));
  return static_cast<double>(numerator / std::pow(static_cast<long double>(s), root));
}

Rational kst_exponent(std::uint64_t d1, std::uint64_t d2) {
  return Rational(2) - Rational(1, std::min(d1, d2) + 1);
}

namespace {

bool sets_equal(const GridSpec& grid) {
  if (grid.arity() == 0) return false;
  auto first = grid.set(0);
  std::sort(first.begin(), first.end());
  for (std::size_t i = 1; i < grid.arity(); ++i) {
    auto other = grid.set(i);
    std::sort(other.begin(), other.end());
    if (other != first) return false;
  }
  return true;
}

bool exceeds(const Sizes& sizes, const Exponents& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sizes[i] <= d[i]) return false;
  }
  return true;
}

// Decimal rational with 12 significant digits, so that reports do not
// depend on the platform's long double.
Rational approximate(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  std::string text(buf);
  auto e_pos = text.find('e');
  std::string mantissa = text.substr(0, e_pos);
  int exp10 = std::stoi(text.substr(e_pos + 1));
  mantissa.erase(mantissa.find('.'), 1);
  Rational q{Int(mantissa)};
  exp10 -= 11;
  if (exp10 >= 0) return q * power(10, static_cast<std::uint64_t>(exp10));
  return q / power(10, static_cast<std::uint64_t>(-exp10));
}

}  // namespace

std::vector<BoundReport> applicable_bounds(const Polynomial& f, const GridSpec& grid) {
  if (!(f.ring() == grid.ring())) {
    throw Error(ErrorCode::kRingMismatch, "polynomial and grid over different rings");
  }
  if (f.arity() != grid.arity()) {
    throw Error(ErrorCode::kArityMismatch, "polynomial and grid of different arity");
  }
  auto sizes = grid.sizes();
  std::size_t n = f.arity();
  std::vector<BoundReport> out;
  std::set<std::pair<std::string, Exponents>> seen;

  auto emit = [&](BoundReport r) {
    auto key = std::make_pair(r.name, r.witness_d.value_or(Exponents{}));
    if (!seen.insert(key).second) return;
    out.push_back(std::move(r));
  };
  auto count_bound = [&](std::string name, Int value, std::string assumptions, Exponents d) {
    BoundReport r;
    r.name = std::move(name);
    r.value = Rational(value);
    r.assumptions = std::move(assumptions);
    r.witness_d = std::move(d);
    r.certified = true;
    return r;
  };

  if (f.is_zero()) return out;
  auto degrees = f.degrees();

  for (const auto& rep : classify(f)) {
    if (!rep.holds) continue;
    const auto& d = rep.witness_d;
    if (!exceeds(sizes, d)) continue;
    switch (rep.condition.kind) {
      case ConditionKind::kLexLargest: {
        auto r = count_bound("lex_largest_product", product_bound(sizes, d),
                             "x^d is the lexicographically largest monomial", d);
        r.order = rep.condition.order;
        emit(r);
        auto s = count_bound("schwartz_additive", schwartz_additive_bound(sizes, d),
                             "x^d is the lexicographically largest monomial", d);
        s.order = rep.condition.order;
        emit(s);
        break;
      }
      case ConditionKind::kSuccessivelyLargest: {
        auto r = count_bound("successively_largest_product", product_bound(sizes, d),
                             "d is a successively largest sequence for seed e", d);
        r.witness_e = rep.witness_e;
        r.order = rep.condition.order;
        emit(r);
        break;
      }
      case ConditionKind::kMaximalMonomial: {
        emit(count_bound("existence_maximal", 1, "x^d is a maximal monomial", d));
        emit(count_bound("additive_existence", additive_existence_bound(sizes, d),
                         "x^d is a maximal monomial", d));
        auto probe = count_bound("product_bound_maximal", product_bound(sizes, d),
                                 "x^d is only maximal; the product bound is not implied", d);
        probe.certified = false;
        emit(probe);
        std::uint64_t l = 1 + *std::max_element(d.begin(), d.end());
        std::uint64_t s = *std::min_element(sizes.begin(), sizes.end());
        if (l >= 2) {
          BoundReport e;
          e.name = "erdos_density";
          e.kind = BoundKind::kZeroDensity;
          e.value = approximate(erdos_density_bound(n, l, s));
          e.approx = e.value.convert_to<double>();
          e.assumptions = "x^d is maximal; valid only for s above an unspecified threshold";
          e.witness_d = d;
          e.asymptotic = true;
          emit(e);
        }
        if (n == 2) {
          BoundReport k;
          k.name = "kst_exponent";
          k.kind = BoundKind::kExponent;
          k.value = kst_exponent(d[0], d[1]);
          k.assumptions = "x^d is maximal; zero count is O(s^value) with an unknown constant";
          k.witness_d = d;
          k.asymptotic = true;
          emit(k);
        }
        break;
      }
      case ConditionKind::kDLeading: {
        auto r = count_bound("existence_d_leading", 1, "e is a d-leading multi-index", d);
        r.witness_e = rep.witness_e;
        emit(r);
        break;
      }
      case ConditionKind::kTotalDegree:
        emit(count_bound("existence_alon", 1, "x^d is a monomial of largest total degree", d));
        break;
      case ConditionKind::kPartialDegrees: {
        emit(count_bound("partial_degrees_product", product_bound(sizes, d),
                         "d_i is the degree of x_i in f", d));
        auto af = gen_alon_furedi_bound({sizes, d, degrees.total});
        auto r = count_bound("gen_alon_furedi", af.value,
                             "degree of x_i at most d_i < |S_i|, total degree " +
                                 std::to_string(degrees.total) + ", argmin y = " +
                                 vector_text(Exponents(af.argmin.begin(), af.argmin.end())),
                             d);
        emit(r);
        break;
      }
    }
  }

  if (sets_equal(grid)) {
    std::uint64_t s = sizes[0];
    std::uint64_t max_partial = *std::max_element(degrees.partial.begin(), degrees.partial.end());
    if (max_partial < s) {
      emit(count_bound("zippel", zippel_bound(s, max_partial, n),
                       "every partial degree at most " + std::to_string(max_partial) +
                           ", equal sets",
                       Exponents(n, static_cast<std::uint32_t>(max_partial))));
    }
    std::uint64_t total = degrees.total;
    if (total < s) {
      Exponents tag{static_cast<std::uint32_t>(total)};
      Int grid_points = power(s, n);
      emit(count_bound("schwartz_zippel", ceil(Rational(grid_points) * (1 - sz_probability(total, s))),
                       "total degree " + std::to_string(total) + ", equal sets", tag));
      BoundReport p = count_bound("schwartz_zippel_probability", 0,
                                  "total degree " + std::to_string(total) + ", equal sets", tag);
      p.kind = BoundKind::kZeroProbability;
      p.value = sz_probability(total, s);
      emit(p);
      emit(count_bound("demillo_lipton", demillo_lipton_bound(s, total, n),
                       "total degree " + std::to_string(total) + ", equal sets", tag));
    }
  }

  std::uint64_t slack = 0;
  for (auto s : sizes) slack += s - 1;
  if (degrees.total <= slack) {
    auto af = alon_furedi_original_bound(sizes, degrees.total);
    auto r = count_bound("alon_furedi_original", af.value,
                         "total degree " + std::to_string(degrees.total) +
                             " and at least one nonzero on the grid",
                         Exponents{static_cast<std::uint32_t>(degrees.total)});
    r.requires_nonzero_on_grid = true;
    emit(r);
  }
  return out;
}

}  // namespace cnz

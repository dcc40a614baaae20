#include "cnz/oracle.hpp"

#include <algorithm>
#include <set>

#include "cnz/error.hpp"
#include "cnz/parallel.hpp"
#include "cnz/random.hpp"
#include "grid_eval.hpp"

namespace cnz {
namespace {

template <class Evaluator>
std::uint64_t count_zeros_in(const Evaluator& eval, const GridSpec& grid, std::uint64_t begin,
                             std::uint64_t end, std::vector<std::uint64_t>* zero_indices) {
  std::vector<std::size_t> digits(grid.arity());
  grid.decode(begin, digits);
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (eval.is_zero(digits)) {
      ++zeros;
      if (zero_indices) zero_indices->push_back(idx);
    }
    detail::advance(digits, grid);
  }
  return zeros;
}

CountResult finish(std::uint64_t points, std::uint64_t zeros,
                   std::optional<std::vector<std::uint64_t>> indices) {
  CountResult out;
  out.zeros = zeros;
  out.nonzeros = points - zeros;
  out.zero_indices = std::move(indices);
  return out;
}

bool wants_zero_set(const CountOptions& options, std::uint64_t points) {
  return options.collect_zeros && points <= options.zero_set_cap;
}

}  // namespace

CountResult count_nonzeros_serial(const Polynomial& f, const GridSpec& grid,
                                  const CountOptions& options) {
  std::uint64_t points = detail::checked_point_count(grid, options.grid_limit);
  std::optional<std::vector<std::uint64_t>> indices;
  if (wants_zero_set(options, points)) indices.emplace();
  std::uint64_t zeros = detail::with_evaluator(f, grid, [&](const auto& eval) {
    return count_zeros_in(eval, grid, 0, points, indices ? &*indices : nullptr);
  });
  return finish(points, zeros, std::move(indices));
}

CountResult count_nonzeros(const Polynomial& f, const GridSpec& grid, const CountOptions& options) {
  std::uint64_t points = detail::checked_point_count(grid, options.grid_limit);
  bool collect = wants_zero_set(options, points);
  return detail::with_evaluator(f, grid, [&](const auto& eval) {
    std::vector<std::uint64_t> block_zeros(thread_count() + 1, 0);
    std::vector<std::vector<std::uint64_t>> block_indices(block_zeros.size());
    int blocks = parallel_blocks(points, [&](std::uint64_t begin, std::uint64_t end, int b) {
      block_zeros[b] = count_zeros_in(eval, grid, begin, end, collect ? &block_indices[b] : nullptr);
    });
    std::uint64_t zeros = 0;
    std::optional<std::vector<std::uint64_t>> indices;
    if (collect) indices.emplace();
    for (int b = 0; b < blocks; ++b) {
      zeros += block_zeros[b];
      if (collect) indices->insert(indices->end(), block_indices[b].begin(), block_indices[b].end());
    }
    return finish(points, zeros, std::move(indices));
  });
}

std::vector<Int> tabulate(const Polynomial& f, const GridSpec& grid, std::uint64_t grid_limit) {
  std::uint64_t points = detail::checked_point_count(grid, grid_limit);
  std::vector<Int> values(points);
  detail::with_evaluator(f, grid, [&](const auto& eval) {
    parallel_blocks(points, [&](std::uint64_t begin, std::uint64_t end, int) {
      std::vector<std::size_t> digits(grid.arity());
      grid.decode(begin, digits);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        values[idx] = eval.value_int(digits);
        detail::advance(digits, grid);
      }
    });
  });
  return values;
}

VerificationReport verify_bounds(const Polynomial& f, const GridSpec& grid,
                                 const CountOptions& options) {
  VerificationReport report;
  report.grid_condition = grid_condition_check(f.ring(), grid).pass;
  auto count = count_nonzeros(f, grid, options);
  report.nonzero_count = count.nonzeros;
  report.zero_count = count.zeros;
  report.grid_size = count.nonzeros + count.zeros;
  Rational zero_fraction(count.zeros, report.grid_size);
  for (auto& bound : applicable_bounds(f, grid)) {
    BoundCheck check{std::move(bound), std::nullopt, 0};
    auto& b = check.bound;
    if (!report.grid_condition) b.certified = false;
    if (b.requires_nonzero_on_grid && count.nonzeros == 0) b.certified = false;
    switch (b.kind) {
      case BoundKind::kNonzeroCount:
        check.slack = Rational(count.nonzeros) - b.value;
        check.sound = check.slack >= 0;
        break;
      case BoundKind::kZeroProbability:
      case BoundKind::kZeroDensity:
        check.slack = b.value - zero_fraction;
        check.sound = check.slack >= 0;
        break;
      case BoundKind::kExponent:
        break;
    }
    report.per_bound.push_back(std::move(check));
  }
  return report;
}

Polynomial tightness_family(const GridSpec& grid, const Exponents& d,
                            const std::optional<std::vector<std::vector<Int>>>& subsets) {
  const auto& ring = grid.ring();
  std::size_t n = grid.arity();
  if (d.size() != n) throw Error(ErrorCode::kArityMismatch, "degree vector has the wrong length");
  if (subsets && subsets->size() != n) {
    throw Error(ErrorCode::kArityMismatch, "need one subset per variable");
  }
  Polynomial out = Polynomial::constant(ring, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] > grid.size(i)) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "d_" + std::to_string(i + 1) + " exceeds |S_" + std::to_string(i + 1) + "|");
    }
    std::vector<Int> chosen;
    if (subsets) {
      std::set<Int> seen;
      for (const auto& a : (*subsets)[i]) {
        Int c = ring.canonical(a);
        const auto& s = grid.set(i);
        if (std::find(s.begin(), s.end(), c) == s.end()) {
          throw Error(ErrorCode::kInvalidArgument, "A_" + std::to_string(i + 1) + " element " +
                                                       c.str() + " is not in S_" +
                                                       std::to_string(i + 1));
        }
        if (!seen.insert(c).second) {
          throw Error(ErrorCode::kInvalidArgument, "A_" + std::to_string(i + 1) + " repeats " + c.str());
        }
        chosen.push_back(c);
      }
      if (chosen.size() != d[i]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "|A_" + std::to_string(i + 1) + "| must equal d_" + std::to_string(i + 1));
      }
    } else {
      chosen.assign(grid.set(i).begin(), grid.set(i).begin() + d[i]);
    }
    Polynomial x = Polynomial::variable(ring, n, i);
    for (const auto& a : chosen) out *= x - Polynomial::constant(ring, n, a);
  }
  return out;
}

MinNonzeroResult min_nonzero_search(const std::vector<Exponents>& support,
                                    const Exponents& required, const GridSpec& grid,
                                    std::uint64_t budget, std::uint64_t seed) {
  const auto& ring = grid.ring();
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupportedRing,
                "minimum search enumerates coefficients over F_p only, got " + ring.to_string());
  }
  std::size_t n = grid.arity();
  std::set<Exponents> unique(support.begin(), support.end());
  for (const auto& e : unique) {
    if (e.size() != n) throw Error(ErrorCode::kArityMismatch, "support monomial of wrong arity");
  }
  if (!unique.count(required)) {
    throw Error(ErrorCode::kHypothesisViolation, "required monomial is not in the support");
  }
  std::vector<Exponents> others;
  for (const auto& e : unique) {
    if (e == required) continue;
    bool above = true;
    for (std::size_t i = 0; i < n; ++i) above = above && e[i] >= required[i];
    if (above) {
      throw Error(ErrorCode::kHypothesisViolation, "required monomial is not maximal in the support");
    }
    others.push_back(e);
  }

  const std::uint64_t p = ring.modulus();
  std::uint64_t points = detail::checked_point_count(grid, 10'000'000);
  auto column = [&](const Exponents& e) {
    std::vector<std::uint64_t> values;
    for (const auto& v : tabulate(Polynomial::monomial(ring, e, 1), grid)) {
      values.push_back(static_cast<std::uint64_t>(v));
    }
    return values;
  };
  auto base = column(required);
  std::vector<std::vector<std::uint64_t>> cols;
  for (const auto& e : others) cols.push_back(column(e));
  std::size_t k = others.size();

  Int space = boost::multiprecision::pow(Int(p), static_cast<unsigned>(k));
  MinNonzeroResult result{points + 1, Polynomial(ring, n), space <= budget, 0};

  auto count_of = [&](const std::vector<std::uint64_t>& coeffs) {
    std::uint64_t nonzero = 0;
    for (std::uint64_t pt = 0; pt < points; ++pt) {
      unsigned __int128 acc = base[pt];
      for (std::size_t j = 0; j < k; ++j) acc += static_cast<unsigned __int128>(coeffs[j]) * cols[j][pt];
      nonzero += static_cast<std::uint64_t>(acc % p) != 0;
    }
    return nonzero;
  };
  auto make_witness = [&](const std::vector<std::uint64_t>& coeffs) {
    Polynomial w = Polynomial::monomial(ring, required, 1);
    for (std::size_t j = 0; j < k; ++j) w.add_term(others[j], coeffs[j]);
    return w;
  };

  if (result.exhaustive) {
    auto total = static_cast<std::uint64_t>(space);
    struct Best {
      std::uint64_t count = UINT64_MAX;
      std::uint64_t index = 0;
    };
    std::vector<Best> best(thread_count() + 1);
    int blocks = parallel_blocks(total, [&](std::uint64_t begin, std::uint64_t end, int b) {
      // Odometer over coefficient digits with incremental value updates.
      std::vector<std::uint64_t> digits(k);
      std::uint64_t rest = begin;
      for (std::size_t j = k; j-- > 0;) {
        digits[j] = rest % p;
        rest /= p;
      }
      std::vector<std::uint64_t> values(points);
      for (std::uint64_t pt = 0; pt < points; ++pt) {
        unsigned __int128 acc = base[pt];
        for (std::size_t j = 0; j < k; ++j) acc += static_cast<unsigned __int128>(digits[j]) * cols[j][pt];
        values[pt] = static_cast<std::uint64_t>(acc % p);
      }
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t nonzero = 0;
        for (auto v : values) nonzero += v != 0;
        if (nonzero < best[b].count) best[b] = {nonzero, idx};
        for (std::size_t j = k; j-- > 0;) {
          if (++digits[j] < p) {
            for (std::uint64_t pt = 0; pt < points; ++pt) {
              values[pt] += cols[j][pt];
              if (values[pt] >= p) values[pt] -= p;
            }
            break;
          }
          digits[j] = 0;
          // Wrapped from p - 1 to 0: add the column once more (p * col = 0).
          for (std::uint64_t pt = 0; pt < points; ++pt) {
            values[pt] += cols[j][pt];
            if (values[pt] >= p) values[pt] -= p;
          }
        }
      }
    });
    Best overall;
    for (int b = 0; b < blocks; ++b) {
      if (best[b].count < overall.count) overall = best[b];
    }
    std::vector<std::uint64_t> coeffs(k);
    std::uint64_t rest = overall.index;
    for (std::size_t j = k; j-- > 0;) {
      coeffs[j] = rest % p;
      rest /= p;
    }
    result.min_count = overall.count;
    result.witness = make_witness(coeffs);
    result.candidates = total;
    return result;
  }

  Rng rng(seed);
  std::vector<std::uint64_t> coeffs(k);
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    for (auto& c : coeffs) c = rng.below(p);
    auto count = count_of(coeffs);
    if (count < result.min_count) {
      result.min_count = count;
      result.witness = make_witness(coeffs);
    }
  }
  result.candidates = budget;
  return result;
}

Polynomial random_polynomial(std::size_t arity, const Exponents& caps, double density,
                             RingSpec ring, std::uint64_t seed) {
  if (caps.size() != arity) throw Error(ErrorCode::kArityMismatch, "caps have the wrong length");
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must lie in (0, 1]");
  }
  Rng rng(seed);
  Polynomial out(ring, arity);
  Exponents e(arity, 0);
  while (true) {
    if (rng.bernoulli(density)) {
      Int c;
      if (ring.is_modular()) {
        c = 1 + rng.below(ring.modulus() - 1);
      } else {
        std::int64_t v = rng.between(1, 10);
        c = rng.below(2) ? v : -v;
      }
      out.add_term(e, c);
    }
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (e[i] < caps[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
      if (i == 0) return out;
    }
    if (arity == 0) return out;
  }
}

}  // namespace cnz

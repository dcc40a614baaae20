#pragma once

// Independent oracles and generators shared by the tests. Nothing here uses
// the library's grid kernels: points are enumerated recursively and
// polynomials are evaluated term by term.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "cnz/grid.hpp"
#include "cnz/oracle.hpp"
#include "cnz/poly.hpp"
#include "cnz/random.hpp"

namespace cnz::test {

inline void for_each_point(const GridSpec& grid, const std::function<void(const std::vector<Int>&)>& visit) {
  std::vector<Int> point(grid.arity());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == grid.arity()) {
      visit(point);
      return;
    }
    for (const auto& x : grid.set(i)) {
      point[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

// Evaluates with plain Int arithmetic and reduces once at the end.
inline Int naive_eval(const Polynomial& f, const std::vector<Int>& point) {
  Int acc = 0;
  for (const auto& [e, c] : f.terms()) {
    Int term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= boost::multiprecision::pow(point[i], e[i]);
    acc += term;
  }
  return f.ring().canonical(acc);
}

inline std::uint64_t brute_nonzeros(const Polynomial& f, const GridSpec& grid) {
  std::uint64_t n = 0;
  for_each_point(grid, [&](const std::vector<Int>& p) {
    if (naive_eval(f, p) != 0) ++n;
  });
  return n;
}

inline std::vector<Int> distinct_elements(const RingSpec& ring, std::size_t count, Rng& rng) {
  std::set<Int> seen;
  std::vector<Int> out;
  while (out.size() < count) {
    Int x = ring.is_modular() ? Int(rng.below(ring.modulus())) : Int(rng.between(-10, 10));
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

inline GridSpec random_grid(const RingSpec& ring, const std::vector<std::size_t>& sizes, Rng& rng) {
  std::vector<std::vector<Int>> sets;
  for (auto s : sizes) sets.push_back(distinct_elements(ring, s, rng));
  return GridSpec(ring, sets);
}

struct CorpusItem {
  Polynomial f;
  GridSpec grid;
};

// Random polynomials over F_p, p in {5, 7, 101}, n <= 3, |S_i| <= 7.
inline std::vector<CorpusItem> random_corpus(std::size_t count, std::uint64_t seed) {
  const std::uint64_t primes[] = {5, 7, 101};
  Rng rng(seed);
  std::vector<CorpusItem> out;
  while (out.size() < count) {
    auto ring = RingSpec::prime_field(primes[rng.below(3)]);
    std::size_t n = 1 + rng.below(3);
    std::size_t max_size = std::min<std::uint64_t>(7, ring.modulus());
    Exponents caps(n);
    std::vector<std::size_t> sizes(n);
    for (std::size_t i = 0; i < n; ++i) {
      caps[i] = static_cast<std::uint32_t>(rng.below(7));
      sizes[i] = 1 + rng.below(max_size);
    }
    double density = 0.15 + 0.5 * static_cast<double>(rng.below(100)) / 100.0;
    Polynomial f = random_polynomial(n, caps, density, ring, rng.next());
    if (f.is_zero()) continue;
    out.push_back({std::move(f), random_grid(ring, sizes, rng)});
  }
  return out;
}

// Solves sum_j g_j a_j^k = [k == m - 1] for k < m by Gaussian elimination.
inline std::vector<Int> vandermonde_solve(const RingSpec& ring, const std::vector<Int>& a) {
  std::size_t m = a.size();
  std::vector<std::vector<Int>> rows(m, std::vector<Int>(m + 1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) rows[k][j] = ring.pow(ring.canonical(a[j]), k);
    rows[k][m] = k + 1 == m ? 1 : 0;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (rows[piv][col] == 0) ++piv;
    std::swap(rows[piv], rows[col]);
    Int inv = ring.inverse(rows[col][col]);
    for (auto& x : rows[col]) x = ring.mul(x, inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      Int factor = rows[r][col];
      for (std::size_t c = 0; c <= m; ++c) rows[r][c] = ring.sub(rows[r][c], ring.mul(factor, rows[col][c]));
    }
  }
  std::vector<Int> g(m);
  for (std::size_t j = 0; j < m; ++j) g[j] = rows[j][m];
  return g;
}

// min prod y_i over the integer box with sum y_i == target (or >= target),
// by enumerating the whole box.
inline std::optional<Int> lattice_min_product(const std::vector<std::uint64_t>& lower,
                                              const std::vector<std::uint64_t>& upper,
                                              std::uint64_t target, bool at_least) {
  std::optional<Int> best;
  std::vector<std::uint64_t> y(lower.size());
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t sum) {
    if (i == y.size()) {
      if (at_least ? sum >= target : sum == target) {
        Int p = 1;
        for (auto v : y) p *= v;
        if (!best || p < *best) best = p;
      }
      return;
    }
    for (y[i] = lower[i]; y[i] <= upper[i]; ++y[i]) rec(i + 1, sum + y[i]);
  };
  rec(0, 0);
  return best;
}

}  // namespace cnz::test

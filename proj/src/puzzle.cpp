#include "cnz/puzzle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "cnz/error.hpp"
#include "cnz/parallel.hpp"
#include "cnz/random.hpp"

namespace cnz {
namespace {

void require_distinct(const std::vector<std::int64_t>& xs, const char* name) {
  std::set<std::int64_t> seen(xs.begin(), xs.end());
  if (seen.size() != xs.size()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("entries of ") + name + " must be distinct");
  }
}

std::size_t count_agreements(const PuzzleInstance& inst) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    for (std::size_t j = 0; j < inst.b.size(); ++j) {
      if (inst.a[i] * inst.b[j] == inst.u[i] + inst.v[j]) ++n;
    }
  }
  return n;
}

std::int64_t to_i64(const Int& x) {
  if (x > kMaxPuzzleEntry || x < -kMaxPuzzleEntry) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial value out of puzzle range");
  }
  return x.convert_to<std::int64_t>();
}

// All ascending k-subsets of [lo, hi].
std::vector<std::vector<std::int64_t>> ascending_tuples(std::size_t k, std::int64_t lo,
                                                        std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    std::int64_t left = static_cast<std::int64_t>(k - cur.size());
    for (std::int64_t x = next; x + left - 1 <= hi; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

Int binomial(std::int64_t n, std::size_t k) {
  if (n < 0 || static_cast<std::uint64_t>(n) < k) return 0;
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - static_cast<std::int64_t>(i)) / (i + 1);
  return r;
}

struct Candidate {
  std::size_t count = 0;
  PuzzleInstance inst;
  bool found = false;
};

// Scores every u (u_1 = 0, spread <= 2R) for fixed a and b.
void scan_offsets(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                  std::int64_t range, Candidate& best) {
  std::size_t s = a.size();
  std::vector<std::int64_t> u(s, 0);
  std::vector<std::int64_t> column(s);
  std::vector<std::int64_t> v(s);
  for (std::size_t i = 1; i < s; ++i) u[i] = -2 * range;
  while (true) {
    auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    if (*hi - *lo <= 2 * range) {
      std::size_t total = 0;
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < s; ++i) column[i] = a[i] * b[j] - u[i];
        std::sort(column.begin(), column.end());
        std::size_t run_best = 0;
        for (std::size_t i = 0; i < s;) {
          std::size_t k = i;
          while (k < s && column[k] == column[i]) ++k;
          if (k - i > run_best) {
            run_best = k - i;
            v[j] = column[i];
          }
          i = k;
        }
        total += run_best;
      }
      if (!best.found || total > best.count) {
        best.found = true;
        best.count = total;
        best.inst = PuzzleInstance{a, b, u, v};
      }
    }
    std::size_t i = s;
    while (i-- > 1) {
      if (++u[i] <= 2 * range) break;
      u[i] = -2 * range;
    }
    if (i == 0 || s == 1) break;
  }
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Improvement {
  std::uint64_t step;
  std::size_t count;
  PuzzleInstance inst;
};

struct RestartTrace {
  std::vector<Improvement> improvements;
  std::uint64_t length = 0;
};

class Climber {
 public:
  Climber(std::size_t s, std::uint64_t seed) : s_(s), width_(3 * static_cast<std::int64_t>(s)), rng_(seed) {}

  PuzzleInstance initial() {
    PuzzleInstance inst;
    inst.a = distinct_values();
    inst.b = distinct_values();
    for (std::size_t i = 0; i < s_; ++i) inst.u.push_back(rng_.between(-width_, width_));
    for (std::size_t j = 0; j < s_; ++j) inst.v.push_back(complete_column(inst, j));
    return inst;
  }

  // Returns false when the move would break distinctness or the entry range.
  bool propose(PuzzleInstance& inst) {
    std::size_t seq = rng_.below(4);
    auto& xs = seq == 0 ? inst.a : seq == 1 ? inst.b : seq == 2 ? inst.u : inst.v;
    std::size_t idx = rng_.below(s_);
    switch (rng_.below(3)) {
      case 0:
        xs[idx] += rng_.below(2) == 0 ? 1 : -1;
        break;
      case 1:
        if (seq < 2) {
          xs[idx] = rng_.between(-width_, width_);
        } else if (seq == 2) {
          std::size_t j = rng_.below(s_);
          xs[idx] = inst.a[idx] * inst.b[j] - inst.v[j];
        } else {
          xs[idx] = complete_column(inst, idx);
        }
        break;
      default: {
        std::size_t other = (idx + 1 + rng_.below(s_ - 1)) % s_;
        std::swap(xs[idx], xs[other]);
        return true;
      }
    }
    if (xs[idx] > kMaxPuzzleEntry || xs[idx] < -kMaxPuzzleEntry) return false;
    if (seq < 2) {
      for (std::size_t k = 0; k < s_; ++k) {
        if (k != idx && xs[k] == xs[idx]) return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::int64_t> distinct_values() {
    std::vector<std::int64_t> out;
    while (out.size() < s_) {
      std::int64_t x = rng_.between(-width_, width_);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  }

  // v_j that makes a random cell of column j agree.
  std::int64_t complete_column(const PuzzleInstance& inst, std::size_t j) {
    std::size_t i = rng_.below(s_);
    return inst.a[i] * inst.b[j] - inst.u[i];
  }

  std::size_t s_;
  std::int64_t width_;
  Rng rng_;
};

RestartTrace run_restart(std::size_t s, std::uint64_t seed, std::uint64_t restart,
                         std::uint64_t cap) {
  Climber climber(s, splitmix(seed ^ splitmix(restart)));
  PuzzleInstance current = climber.initial();
  std::size_t current_count = count_agreements(current);
  RestartTrace trace;
  trace.improvements.push_back({0, current_count, current});
  std::uint64_t stale = 0;
  while (trace.length < cap && stale < kRestartPatience) {
    ++trace.length;
    PuzzleInstance next = current;
    std::size_t next_count = 0;
    bool ok = climber.propose(next);
    if (ok) next_count = count_agreements(next);
    if (ok && next_count >= current_count) {
      current = std::move(next);
      if (next_count > trace.improvements.back().count) {
        trace.improvements.push_back({trace.length, next_count, current});
        stale = 0;
        current_count = next_count;
        continue;
      }
      current_count = next_count;
    }
    ++stale;
  }
  return trace;
}

}  // namespace

void PuzzleInstance::validate() const {
  std::size_t s = a.size();
  if (b.size() != s || u.size() != s || v.size() != s) {
    throw Error(ErrorCode::kInvalidArgument, "a, b, u, v must have the same length");
  }
  for (const auto* xs : {&a, &b, &u, &v}) {
    for (auto x : *xs) {
      if (x > kMaxPuzzleEntry || x < -kMaxPuzzleEntry) {
        throw Error(ErrorCode::kInvalidArgument, "puzzle entries are limited to magnitude 1e9");
      }
    }
  }
  require_distinct(a, "a");
  require_distinct(b, "b");
}

AgreementPattern agreement_count(const PuzzleInstance& inst) {
  inst.validate();
  AgreementPattern pattern;
  pattern.s = inst.size();
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    for (std::size_t j = 0; j < inst.b.size(); ++j) {
      if (inst.a[i] * inst.b[j] == inst.u[i] + inst.v[j]) pattern.cells.emplace_back(i, j);
    }
  }
  return pattern;
}

std::vector<std::vector<std::int64_t>> product_table(const PuzzleInstance& inst) {
  std::vector<std::vector<std::int64_t>> t(inst.a.size());
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    for (auto bj : inst.b) t[i].push_back(inst.a[i] * bj);
  }
  return t;
}

std::vector<std::vector<std::int64_t>> sum_table(const PuzzleInstance& inst) {
  std::vector<std::vector<std::int64_t>> t(inst.u.size());
  for (std::size_t i = 0; i < inst.u.size(); ++i) {
    for (auto vj : inst.v) t[i].push_back(inst.u[i] + vj);
  }
  return t;
}

PuzzleInstance from_polynomial(std::vector<std::int64_t> a, std::vector<std::int64_t> c,
                               std::vector<std::int64_t> b, std::vector<std::int64_t> d) {
  if (c.size() != a.size() || d.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one value per evaluation point is required");
  }
  PuzzleInstance inst{std::move(a), std::move(b), std::move(c), std::move(d)};
  inst.validate();
  return inst;
}

PuzzleInstance from_polynomial(const std::vector<std::int64_t>& a, const Polynomial& p,
                               const std::vector<std::int64_t>& b, const Polynomial& q) {
  for (const auto* f : {&p, &q}) {
    if (f->arity() != 1) throw Error(ErrorCode::kArityMismatch, "P and Q must be univariate");
    if (f->ring().kind() != RingKind::kIntegers) {
      throw Error(ErrorCode::kUnsupportedRing, "P and Q must have integer coefficients");
    }
  }
  std::vector<std::int64_t> c, d;
  for (auto x : a) {
    Int pt[1] = {Int(x)};
    c.push_back(to_i64(p.evaluate(pt)));
  }
  for (auto y : b) {
    Int pt[1] = {Int(y)};
    d.push_back(to_i64(q.evaluate(pt)));
  }
  return from_polynomial(a, std::move(c), b, std::move(d));
}

bool k22_check(const AgreementPattern& pattern) {
  std::set<std::pair<std::size_t, std::size_t>> column_pairs;
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& [i, j] : pattern.cells) {
    if (rows.size() <= i) rows.resize(i + 1);
    rows[i].push_back(j);
  }
  for (auto& cols : rows) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (std::size_t x = 0; x < cols.size(); ++x) {
      for (std::size_t y = x + 1; y < cols.size(); ++y) {
        if (!column_pairs.emplace(cols[x], cols[y]).second) return false;
      }
    }
  }
  return true;
}

std::uint64_t k22_free_edge_bound(std::uint64_t s) {
  if (s == 0) return 0;
  Int disc = Int(s) * s * (4 * Int(s) - 3);
  Int root = boost::multiprecision::sqrt(disc);
  return ((Int(s) + root) / 2).convert_to<std::uint64_t>();
}

ExhaustiveResult exhaustive_search(std::size_t s, std::int64_t range, std::uint64_t budget) {
  if (s == 0) throw Error(ErrorCode::kInvalidArgument, "s must be positive");
  if (range < 0 || range > 1000) throw Error(ErrorCode::kInvalidArgument, "range must lie in [0, 1000]");
  if (static_cast<std::uint64_t>(2 * range + 1) < s) {
    throw Error(ErrorCode::kInvalidArgument, "range too small for " + std::to_string(s) + " distinct values");
  }
  Int span = 2 * range + 1;
  Int a_count = binomial(2 * range, s - 1);
  Int b_count = binomial(2 * range + 1, s);
  Int u_count = boost::multiprecision::pow(span, static_cast<unsigned>(s - 1)) +
                Int(2 * range) * (boost::multiprecision::pow(span, static_cast<unsigned>(s - 1)) -
                                  boost::multiprecision::pow(span - 1, static_cast<unsigned>(s - 1)));
  if (s == 1) u_count = 1;
  Int total = a_count * b_count * u_count;
  if (total > budget) {
    throw Error(ErrorCode::kResourceLimit, "exhaustive search needs " + total.str() +
                                               " candidates, above the budget of " +
                                               std::to_string(budget) + "; use local search");
  }

  auto tails = ascending_tuples(s - 1, 1, 2 * range);
  auto bs = ascending_tuples(s, -range, range);
  std::uint64_t pairs = tails.size() * bs.size();
  std::vector<Candidate> partial(thread_count() + 1);
  int blocks = parallel_blocks(pairs, [&](std::uint64_t begin, std::uint64_t end, int block) {
    for (std::uint64_t p = begin; p < end; ++p) {
      std::vector<std::int64_t> a{0};
      const auto& tail = tails[p / bs.size()];
      a.insert(a.end(), tail.begin(), tail.end());
      scan_offsets(a, bs[p % bs.size()], range, partial[block]);
    }
  });
  Candidate best;
  for (int b = 0; b < blocks; ++b) {
    if (partial[b].found && (!best.found || partial[b].count > best.count)) best = partial[b];
  }

  // Shift back into [-R, R]; the pattern is unchanged.
  PuzzleInstance inst = best.inst;
  std::int64_t shift_u = -range - std::min<std::int64_t>(0, *std::min_element(inst.u.begin(), inst.u.end()));
  for (std::size_t i = 0; i < s; ++i) {
    inst.a[i] -= range;
    inst.u[i] += shift_u;
  }
  for (std::size_t j = 0; j < s; ++j) inst.v[j] -= range * inst.b[j] + shift_u;

  ExhaustiveResult out;
  out.best = std::move(inst);
  out.count = best.count;
  out.candidates = total.convert_to<std::uint64_t>();
  return out;
}

LocalSearchResult local_search(std::size_t s, std::uint64_t budget, std::uint64_t seed) {
  if (s < 2) throw Error(ErrorCode::kInvalidArgument, "local search needs s >= 2");
  LocalSearchResult result;
  result.seed = seed;
  std::uint64_t remaining = budget;
  std::uint64_t next_restart = 0;
  bool have_best = false;
  // Restarts run in waves; a trace depends only on (seed, restart) and is
  // truncated afterwards to the budget left at its turn.
  do {
    auto wave = static_cast<std::uint64_t>(thread_count());
    std::vector<RestartTrace> traces(wave);
    std::uint64_t cap = remaining;
    std::uint64_t first = next_restart;
    parallel_blocks(wave, [&](std::uint64_t begin, std::uint64_t end, int) {
      for (std::uint64_t r = begin; r < end; ++r) traces[r] = run_restart(s, seed, first + r, cap);
    });
    for (std::uint64_t r = 0; r < wave; ++r) {
      std::uint64_t used = std::min(traces[r].length, remaining);
      std::uint64_t offset = budget - remaining;
      for (const auto& imp : traces[r].improvements) {
        if (imp.step > used) break;
        if (!have_best || imp.count > result.count) {
          have_best = true;
          result.count = imp.count;
          result.best = imp.inst;
          result.history.push_back({offset + imp.step, first + r, imp.count});
        }
      }
      remaining -= used;
      ++result.restarts;
      ++next_restart;
      if (remaining == 0) break;
    }
  } while (remaining > 0);
  result.steps = budget;
  return result;
}

}  // namespace cnz

// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cnz/analysis.hpp"
#include "cnz/bounds.hpp"
#include "cnz/oracle.hpp"
#include "cnz/parser.hpp"
#include "cnz/pit.hpp"
#include "cnz/puzzle.hpp"
#include "cnz/transform.hpp"
#include "support.hpp"

namespace cnz {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

const RingSpec kZ = RingSpec::integers();

Polynomial ellipse(RingSpec ring) { return parse_poly("x1^2 - x1*x2 + x2^2 - 1", {"x1", "x2"}, ring); }

// Ellipse counterexample: exact counts, the product bound fails, the
// additive bound is tight.
void ellipse_counterexample(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  GridSpec grid(kZ, {{-1, 0, 1}, {-1, 0, 1}});
  auto report = verify_bounds(ellipse(kZ), grid);
  o.require(report.nonzero_count == 3 && report.zero_count == 6, "counts");
  o.require(test::brute_nonzeros(ellipse(kZ), grid) == 3, "brute-force count");
  o.require(product_bound(grid.sizes(), {1, 1}) == 4, "product bound value");
  o.require(additive_existence_bound(grid.sizes(), {1, 1}) == 3, "additive bound value");
  bool probe = false, additive = false;
  for (const auto& c : report.per_bound) {
    if (c.bound.witness_d != Exponents{1, 1}) continue;
    if (c.bound.name == "product_bound_maximal") probe = c.bound.value == 4 && c.sound == false && !c.bound.certified;
    if (c.bound.name == "additive_existence") additive = c.bound.value == 3 && c.sound == true && c.slack == 0;
  }
  o.require(probe, "product bound flagged unsound");
  o.require(additive, "additive bound sound with slack 0");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "time limit");
  o.detail << "nonzeros=" << report.nonzero_count << " zeros=" << report.zero_count << " time=" << secs << "s";
}

// Generalized product minimum: the 8x8 instance with caps (5,4) plus every instance with
// n <= 3 and |S_i| <= 8 against lattice enumeration.
void alon_furedi(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto known = gen_alon_furedi_bound({{8, 8}, {5, 4}, 7});
  o.require(known.value == 18 && known.argmin == std::vector<std::uint64_t>{3, 6}, "known instance");
  std::uint64_t instances = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::uint64_t> sizes(n, 1);
    while (true) {
      Exponents caps(n, 0);
      while (true) {
        // Bucket every z in the cap box by its sum d; y = |S| - z.
        std::map<std::uint64_t, Int> best;
        Exponents z(n, 0);
        while (true) {
          Int prod = 1;
          std::uint64_t d = 0;
          for (std::size_t i = 0; i < n; ++i) {
            prod *= sizes[i] - z[i];
            d += z[i];
          }
          auto it = best.find(d);
          if (it == best.end() || prod < it->second) best[d] = prod;
          std::size_t i = 0;
          while (i < n && z[i] == caps[i]) z[i++] = 0;
          if (i == n) break;
          ++z[i];
        }
        for (const auto& [d, value] : best) {
          ++instances;
          auto dp = gen_alon_furedi_bound({sizes, caps, d});
          if (dp.value != value) {
            o.require(false, "mismatch at d=" + std::to_string(d));
          }
        }
        std::size_t i = 0;
        while (i < n && caps[i] + 1 == sizes[i]) caps[i++] = 0;
        if (i == n) break;
        ++caps[i];
      }
      std::size_t i = 0;
      while (i < n && sizes[i] == 8) sizes[i++] = 1;
      if (i == n) break;
      ++sizes[i];
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "time limit");
  o.detail << "N=" << known.value << " at (" << known.argmin[0] << "," << known.argmin[1] << "); " << instances
           << " instances agree; time=" << secs << "s";
}

void tightness(Outcome& o) {
  Rng rng(2024);
  std::uint64_t checks = 0;
  for (int g = 0; g < 50; ++g) {
    auto ring = g % 2 ? RingSpec::prime_field(101) : kZ;
    std::size_t n = 1 + rng.below(3);
    std::vector<std::size_t> sizes(n);
    for (auto& s : sizes) s = 1 + rng.below(6);
    auto grid = test::random_grid(ring, sizes, rng);
    Exponents d(n, 0);
    while (true) {
      auto f = tightness_family(grid, d);
      auto brute = test::brute_nonzeros(f, grid);
      o.require(Int(brute) == product_bound(grid.sizes(), d), "slack 0");
      ++checks;
      std::size_t i = 0;
      while (i < n && d[i] + 1 == sizes[i]) d[i++] = 0;
      if (i == n) break;
      ++d[i];
    }
  }
  o.detail << checks << " (grid, d) pairs with slack 0";
}

const std::vector<test::CorpusItem>& corpus() {
  static const auto items = test::random_corpus(1000, 77);
  return items;
}

// Compares against an independent brute-force count, not the library's.
void bound_soundness(Outcome& o) {
  std::uint64_t certified = 0, violations = 0;
  for (const auto& item : corpus()) {
    auto report = verify_bounds(item.f, item.grid);
    auto brute = test::brute_nonzeros(item.f, item.grid);
    Int size = item.grid.point_count();
    o.require(report.nonzero_count == brute, "library count");
    for (const auto& c : report.per_bound) {
      const auto& b = c.bound;
      if (!b.certified || b.asymptotic) continue;
      ++certified;
      bool ok = true;
      if (b.kind == BoundKind::kNonzeroCount) ok = b.value <= Rational(Int(brute));
      if (b.kind == BoundKind::kZeroProbability) ok = Rational(size - brute, size) <= b.value;
      if (!ok) {
        ++violations;
        o.require(false, b.name + " on " + render(item.f));
      }
      o.require(c.sound == ok, "soundness flag for " + b.name);
    }
  }
  o.detail << certified << " certified bound checks, " << violations << " violations";
}

void trimming(Outcome& o) {
  std::uint64_t preserved = 0;
  for (const auto& item : corpus()) {
    auto t = trim(item.f, item.grid);
    test::for_each_point(item.grid, [&](const std::vector<Int>& p) {
      o.require(test::naive_eval(t, p) == test::naive_eval(item.f, p), "grid values");
    });
    for (const auto& [e, c] : t.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) o.require(e[i] < item.grid.size(i), "partial degrees");
    }
    for (const auto& e : maximal_monomials(item.f)) {
      bool small = true;
      for (std::size_t i = 0; i < e.size(); ++i) small = small && e[i] < item.grid.size(i);
      if (!small) continue;
      o.require(t.coefficient(e) == item.f.coefficient(e), "maximal coefficient");
      ++preserved;
    }
  }
  o.detail << corpus().size() << " polynomials, " << preserved << " maximal coefficients preserved";
}

void coefficient_formula(Outcome& o) {
  Rng rng(606);
  int done = 0;
  for (std::uint64_t seed = 0; done < 500; ++seed) {
    const std::uint64_t primes[] = {7, 11, 101};
    auto ring = RingSpec::prime_field(primes[seed % 3]);
    std::size_t n = 1 + rng.below(3);
    auto f = random_polynomial(n, Exponents(n, 5), 0.3, ring, seed);
    if (f.is_zero()) continue;
    auto maximal = maximal_monomials(f);
    const auto d = maximal[rng.below(maximal.size())];
    if (!witness_holds(f, {ConditionKind::kMaximalMonomial, {}}, d, std::nullopt)) {
      o.require(false, "maximal witness");
      continue;
    }
    std::vector<std::size_t> sizes;
    for (auto di : d) sizes.push_back(di + 1);
    auto grid = test::random_grid(ring, sizes, rng);
    auto value = coefficient_via_grid(tabulate(f, grid), grid, d);
    o.require(value.value() == f.coefficient(d), "coefficient");
    for (std::size_t i = 0; i < n; ++i) {
      auto m = vandermonde_multipliers(ring, grid.set(i));
      for (std::uint64_t k = 0; k <= d[i]; ++k) {
        Int sum = 0;
        for (std::size_t j = 0; j < m.elements.size(); ++j) {
          sum += m.weights[j] * boost::multiprecision::pow(m.elements[j], static_cast<unsigned>(k));
        }
        o.require(ring.canonical(sum) == (k == d[i] ? 1 : 0), "multiplier moments");
      }
    }
    ++done;
  }
  o.detail << done << " coefficients recovered exactly";
}

void successively_largest_check(Outcome& o) {
  auto f = parse_poly("x1^7 + x1^6*x2^9 + x1*x2^2 + x1*x2 + x2^6", {"x1", "x2"}, kZ);
  auto a = successively_largest(f, {1, 1}, {0, 1});
  auto b = successively_largest(f, {0, 6}, {0, 1});
  o.require(a == Exponents{7, 2}, "seed x1*x2");
  o.require(b == Exponents{7, 6}, "seed x2^6");
  std::uint64_t checked = 0;
  for (const auto& item : corpus()) {
    auto brute = test::brute_nonzeros(item.f, item.grid);
    for (const auto& bnd : applicable_bounds(item.f, item.grid)) {
      if (bnd.name != "successively_largest_product" || !bnd.certified) continue;
      ++checked;
      o.require(bnd.value <= Rational(Int(brute)), "quantitative bound");
    }
  }
  o.require(checked > 0, "corpus exercises the bound");
  o.detail << "(7,2) and (7,6); " << checked << " certified quantitative bounds sound";
}

void d_leading(Outcome& o) {
  auto f = parse_poly("x1^4*x2^8 + x1*x2 + x1^6*x2^2", {"x1", "x2"}, kZ);
  o.require(is_d_leading(f, {1, 1}, {4, 2}), "worked example");
  Rng rng(88);
  int found = 0;
  auto ring = RingSpec::prime_field(101);
  for (std::uint64_t seed = 0; found < 200 && seed < 100000; ++seed) {
    std::size_t n = 2 + seed % 2;
    auto g = random_polynomial(n, Exponents(n, 5), 0.25, ring, seed);
    if (g.is_zero()) continue;
    for (const auto& r : classify(g)) {
      if (r.condition.kind != ConditionKind::kDLeading || !r.holds) continue;
      // Skip maximal witnesses; they are covered by the coefficient checks.
      if (witness_holds(g, {ConditionKind::kMaximalMonomial, {}}, r.witness_d, std::nullopt) &&
          *r.witness_e == r.witness_d) {
        continue;
      }
      o.require(is_d_leading(g, *r.witness_e, r.witness_d), "report re-check");
      std::vector<std::size_t> sizes;
      for (auto di : r.witness_d) sizes.push_back(di + 1);
      auto grid = test::random_grid(ring, sizes, rng);
      o.require(test::brute_nonzeros(g, grid) >= 1, "existence");
      ++found;
      break;
    }
  }
  o.require(found == 200, "instance count");
  o.detail << found << " d-leading instances with a nonzero";
}

using ExpSet = std::set<Exponents>;

ExpSet intersect(const ExpSet& a, const ExpSet& b) {
  ExpSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

void for_box(const Exponents& cap, const std::function<void(const Exponents&)>& visit) {
  Exponents x(cap.size(), 0);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == cap[i]) x[i++] = 0;
    if (i == x.size()) return;
    ++x[i];
  }
}

void forbidden_intersections(Outcome& o) {
  std::uint64_t cases = 0;
  for (const Exponents& cap : {Exponents{6, 6}, Exponents{4, 4, 4}}) {
    auto orders = all_orders(cap.size());
    for_box(cap, [&](const Exponents& d) {
      std::optional<ExpSet> lex;
      for (const auto& order : orders) {
        auto region = forbidden_set({ConditionKind::kLexLargest, order}, d, std::nullopt, cap);
        ExpSet r(region.begin(), region.end());
        lex = lex ? intersect(*lex, r) : r;
      }
      auto maximal = forbidden_set({ConditionKind::kMaximalMonomial, {}}, d, std::nullopt, cap);
      o.require(ExpSet(maximal.begin(), maximal.end()) == *lex, "maximal vs lex");
      ++cases;
      for_box(d, [&](const Exponents& e) {
        std::optional<ExpSet> sl;
        for (const auto& order : orders) {
          auto region = forbidden_set({ConditionKind::kSuccessivelyLargest, order}, d, e, cap);
          ExpSet r(region.begin(), region.end());
          sl = sl ? intersect(*sl, r) : r;
        }
        auto lead = forbidden_set({ConditionKind::kDLeading, {}}, d, e, cap);
        o.require(ExpSet(lead.begin(), lead.end()) == *sl, "d-leading vs successively largest");
        ++cases;
      });
    });
  }
  o.detail << cases << " (d, e) cases set-equal";
}

std::string random_expr(Rng& rng, std::size_t arity, int depth) {
  static const char* names[] = {"x", "y", "z"};
  if (depth == 0 || rng.below(4) == 0) {
    if (rng.below(3) == 0) return std::to_string(rng.below(7));
    return names[rng.below(arity)];
  }
  switch (rng.below(5)) {
    case 0: return "(" + random_expr(rng, arity, depth - 1) + " + " + random_expr(rng, arity, depth - 1) + ")";
    case 1: return "(" + random_expr(rng, arity, depth - 1) + " - " + random_expr(rng, arity, depth - 1) + ")";
    case 2: return "(" + random_expr(rng, arity, depth - 1) + ")^" + std::to_string(2 + rng.below(2));
    default: return random_expr(rng, arity, depth - 1) + "*" + random_expr(rng, arity, depth - 1);
  }
}

void schwartz_zippel(Outcome& o) {
  auto ring = RingSpec::prime_field(101);
  const std::vector<std::string> vars{"x", "y", "z"};
  {
    std::vector<std::string> xy{"x", "y"};
    auto diff = ExprDag::difference(parse_dag("(x+y)^2", xy, ring), parse_dag("x^2+y^2", xy, ring));
    auto c = count_dag_zeros(diff, sample_grid(diff, 10));
    o.require(c.zeros == 19 && c.points == 100, "worked example 19/100");
  }
  Rng rng(1010);
  int pairs = 0;
  Rational worst = 0;
  while (pairs < 200) {
    std::size_t n = 1 + rng.below(3);
    std::vector<std::string> names(vars.begin(), vars.begin() + n);
    auto g1 = parse_dag(random_expr(rng, n, 3), names, ring);
    auto g2 = parse_dag(random_expr(rng, n, 3), names, ring);
    auto diff = ExprDag::difference(g1, g2);
    auto d = degree_upper_bound(diff);
    if (d >= 10) continue;
    auto expanded = expand(diff);
    if (expanded.is_zero()) continue;
    auto grid = sample_grid(diff, 10);
    auto counted = count_dag_zeros(diff, grid);
    auto brute_zeros = counted.points - test::brute_nonzeros(expanded, grid);
    o.require(counted.zeros == brute_zeros, "dag count vs expanded count");
    Rational fraction(counted.zeros, counted.points);
    o.require(fraction <= Rational(d, 10), "zero fraction <= d/s");
    if (d > 0) worst = std::max(worst, fraction / Rational(d, 10));
    ++pairs;
  }
  o.detail << "19/100 for the worked example; " << pairs << " pairs within d/s (max ratio "
           << worst.convert_to<double>() << ")";
}

void puzzle(Outcome& o) {
  PuzzleInstance tables{{6, 7, 8}, {1, 3, 5}, {1, 6, 7}, {1, 17, 29}};
  o.require(agreement_count(tables).count() == 6, "known tables");
  const std::uint64_t seed = 1;
  auto local = local_search(3, 100000, seed);
  o.require(local.count >= 6 && agreement_count(local.best).count() == local.count, "local search");
  Rng rng(4242);
  int free = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t s = 2 + rng.below(5);
    PuzzleInstance inst;
    std::set<std::int64_t> sa, sb;
    while (inst.a.size() < s) {
      auto x = rng.between(-8, 8);
      if (sa.insert(x).second) inst.a.push_back(x);
    }
    while (inst.b.size() < s) {
      auto x = rng.between(-8, 8);
      if (sb.insert(x).second) inst.b.push_back(x);
    }
    for (std::size_t i = 0; i < s; ++i) inst.u.push_back(rng.between(-10, 10));
    // Columns complete random cells so that patterns are not trivially empty.
    for (std::size_t j = 0; j < s; ++j) inst.v.push_back(inst.a[rng.below(s)] * inst.b[j] - inst.u[rng.below(s)]);
    auto p = agreement_count(inst);
    bool ok = k22_check(p) && p.count() <= k22_free_edge_bound(s);
    o.require(ok, "k22");
    free += ok;
  }
  o.detail << "tables=6; local search (seed " << seed << ") reached " << local.count << "; " << free
           << "/10000 random patterns K2,2-free";
}

}  // namespace
}  // namespace cnz

int main() {
  using Check = std::pair<const char*, void (*)(cnz::Outcome&)>;
  const Check checks[] = {
      {"ellipse counterexample", cnz::ellipse_counterexample},
      {"generalized Alon-Furedi", cnz::alon_furedi},
      {"tightness family", cnz::tightness},
      {"bound soundness", cnz::bound_soundness},
      {"trimming", cnz::trimming},
      {"coefficient formula", cnz::coefficient_formula},
      {"successively largest", cnz::successively_largest_check},
      {"d-leading existence", cnz::d_leading},
      {"forbidden-region intersections", cnz::forbidden_intersections},
      {"Schwartz-Zippel zero fraction", cnz::schwartz_zippel},
      {"table agreement puzzle", cnz::puzzle},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : checks) {
    cnz::Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.str().c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}

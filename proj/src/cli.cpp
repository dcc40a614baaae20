#include "cnz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "cnz/analysis.hpp"
#include "cnz/bounds.hpp"
#include "cnz/error.hpp"
#include "cnz/grid.hpp"
#include "cnz/oracle.hpp"
#include "cnz/parallel.hpp"
#include "cnz/parser.hpp"
#include "cnz/pit.hpp"
#include "cnz/puzzle.hpp"
#include "cnz/transform.hpp"

namespace cnz::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct Config {
  std::string ring = "int";
  std::string grid_path;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string format = "json";
  std::uint64_t limit_grid = 100'000'000;
  std::string vars;

  std::string poly_path;
  bool list_zeros = false;
  std::vector<std::uint32_t> monomial;
  std::vector<std::uint32_t> degrees;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> caps;
  std::optional<std::uint64_t> total;
  std::string constraint = "equal";
  std::string expr1, expr2;
  std::uint64_t samples = 0;
  std::uint64_t trials = 10;
  std::size_t side = 0;
  std::int64_t range = 0;
  std::uint64_t candidate_budget = 100'000'000;
  std::uint64_t step_budget = 100'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string exact(const Int& x) { return x.str(); }

std::string exact(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Small integers as JSON numbers, anything wider as a decimal string.
Json json_int(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json json_point(const std::vector<Int>& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(json_int(x));
  return out;
}

Json json_grid(const GridSpec& grid) {
  Json out = Json::array();
  for (const auto& set : grid.sets()) out.push_back(json_point(set));
  return out;
}

Json json_exponents(const std::optional<Exponents>& e) {
  if (!e) return nullptr;
  return Json(*e);
}

Json json_bound(const BoundReport& b) {
  Json j;
  j["name"] = b.name;
  j["kind"] = to_string(b.kind);
  j["value"] = exact(b.value);
  j["approx"] = b.approx ? Json(*b.approx) : Json(nullptr);
  j["assumptions"] = b.assumptions;
  j["witness_d"] = json_exponents(b.witness_d);
  j["witness_e"] = json_exponents(b.witness_e);
  j["order"] = b.order ? Json(*b.order) : Json(nullptr);
  j["certified"] = b.certified;
  j["asymptotic"] = b.asymptotic;
  j["requires_nonzero_on_grid"] = b.requires_nonzero_on_grid;
  return j;
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

struct Input {
  RingSpec ring;
  std::vector<std::string> names;
  Polynomial poly;
};

Input load_polynomial(const Config& cfg) {
  RingSpec ring = RingSpec::parse(cfg.ring);
  std::string text = read_file(cfg.poly_path);
  auto names = cfg.vars.empty() ? infer_variables(text) : split_names(cfg.vars);
  Polynomial f = parse_poly(text, names, ring);
  return {ring, names, std::move(f)};
}

GridSpec load_grid(const Config& cfg, const RingSpec& ring, std::size_t arity) {
  if (cfg.grid_path.empty()) throw Error(ErrorCode::kInvalidArgument, "--grid is required");
  GridSpec grid = GridSpec::parse(read_file(cfg.grid_path), ring);
  if (grid.arity() != arity) {
    throw Error(ErrorCode::kArityMismatch, "grid has " + std::to_string(grid.arity()) +
                                               " variables, polynomial has " + std::to_string(arity));
  }
  return grid;
}

Json describe_input(const Input& in) {
  Json j;
  j["ring"] = in.ring.to_string();
  j["variables"] = in.names;
  j["polynomial"] = render(in.poly, in.names);
  return j;
}

Json cmd_analyze(const Config& cfg) {
  Input in = load_polynomial(cfg);
  Json out = header("analyze");
  out.update(describe_input(in));
  Json reports = Json::array();
  for (const auto& r : classify(in.poly)) {
    Json j;
    j["condition"] = to_string(r.condition.kind);
    j["order"] = r.condition.order;
    j["witness_d"] = r.witness_d;
    j["witness_e"] = json_exponents(r.witness_e);
    j["holds"] = r.holds;
    reports.push_back(std::move(j));
  }
  out["reports"] = std::move(reports);
  return out;
}

Json cmd_bounds(const Config& cfg) {
  Json out = header("bounds");
  if (!cfg.sizes.empty() || !cfg.caps.empty() || cfg.total) {
    if (cfg.sizes.empty() || cfg.caps.empty() || !cfg.total) {
      throw Error(ErrorCode::kInvalidArgument, "--sizes, --caps and --total go together");
    }
    if (!cfg.poly_path.empty()) throw Error(ErrorCode::kInvalidArgument, "give a polynomial or --sizes, not both");
    if (cfg.constraint != "equal" && cfg.constraint != "at-least") {
      throw Error(ErrorCode::kInvalidArgument, "--constraint is equal or at-least");
    }
    AFInstance inst{cfg.sizes, Exponents(cfg.caps.begin(), cfg.caps.end()), *cfg.total};
    auto constraint = cfg.constraint == "equal" ? SumConstraint::kEqual : SumConstraint::kAtLeast;
    ProductMinimum m = gen_alon_furedi_bound(inst, constraint);
    out["sizes"] = cfg.sizes;
    out["caps"] = cfg.caps;
    out["total"] = *cfg.total;
    out["constraint"] = cfg.constraint;
    Json b;
    b["name"] = "gen_alon_furedi";
    b["value"] = exact(m.value);
    b["argmin"] = m.argmin;
    out["bounds"] = Json::array({b});
    return out;
  }
  if (cfg.poly_path.empty()) throw Error(ErrorCode::kInvalidArgument, "a polynomial file is required");
  Input in = load_polynomial(cfg);
  GridSpec grid = load_grid(cfg, in.ring, in.poly.arity());
  out.update(describe_input(in));
  out["grid"] = json_grid(grid);
  Json list = Json::array();
  for (const auto& b : applicable_bounds(in.poly, grid)) list.push_back(json_bound(b));
  out["bounds"] = std::move(list);
  return out;
}

Json cmd_verify(const Config& cfg) {
  Input in = load_polynomial(cfg);
  GridSpec grid = load_grid(cfg, in.ring, in.poly.arity());
  CountOptions opts;
  opts.grid_limit = cfg.limit_grid;
  VerificationReport report = verify_bounds(in.poly, grid, opts);
  Json out = header("verify");
  out.update(describe_input(in));
  out["grid"] = json_grid(grid);
  out["grid_size"] = report.grid_size;
  out["grid_condition"] = report.grid_condition;
  out["nonzero_count"] = report.nonzero_count;
  out["zero_count"] = report.zero_count;
  Json checks = Json::array();
  for (const auto& c : report.per_bound) {
    Json j = json_bound(c.bound);
    j["sound"] = c.sound ? Json(*c.sound) : Json(nullptr);
    j["slack"] = exact(c.slack);
    checks.push_back(std::move(j));
  }
  out["bounds"] = std::move(checks);
  if (cfg.list_zeros) {
    opts.collect_zeros = true;
    CountResult counted = count_nonzeros(in.poly, grid, opts);
    if (!counted.zero_indices) {
      throw Error(ErrorCode::kResourceLimit, "grid too large to list zeros");
    }
    Json zeros = Json::array();
    for (auto idx : *counted.zero_indices) zeros.push_back(json_point(grid.point(idx)));
    out["zeros"] = std::move(zeros);
  }
  return out;
}

Json cmd_trim(const Config& cfg) {
  Input in = load_polynomial(cfg);
  GridSpec grid = load_grid(cfg, in.ring, in.poly.arity());
  Polynomial t = trim(in.poly, grid);
  Json out = header("trim");
  out.update(describe_input(in));
  out["grid"] = json_grid(grid);
  out["trimmed"] = render(t, in.names);
  out["trimmed_terms"] = t.term_count();
  return out;
}

Json cmd_coeff(const Config& cfg) {
  Input in = load_polynomial(cfg);
  GridSpec grid = load_grid(cfg, in.ring, in.poly.arity());
  Exponents d(cfg.monomial.begin(), cfg.monomial.end());
  if (d.size() != in.poly.arity()) throw Error(ErrorCode::kArityMismatch, "--monomial has the wrong length");
  for (const auto& [e, c] : in.poly.terms()) {
    bool above = e != d;
    for (std::size_t i = 0; i < d.size() && above; ++i) above = e[i] >= d[i];
    if (above) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "x^d is not maximal: f contains " + render(Polynomial::monomial(in.ring, e, 1), in.names));
    }
  }
  RingElem value = coefficient_via_grid(tabulate(in.poly, grid, cfg.limit_grid), grid, d);
  Json out = header("coeff");
  out.update(describe_input(in));
  out["grid"] = json_grid(grid);
  out["monomial"] = d;
  out["coefficient_via_grid"] = exact(value.value());
  out["stored_coefficient"] = exact(in.poly.coefficient(d));
  return out;
}

Json cmd_pit(const Config& cfg) {
  RingSpec ring = RingSpec::parse(cfg.ring);
  std::vector<std::string> names;
  if (!cfg.vars.empty()) {
    names = split_names(cfg.vars);
  } else {
    names = infer_variables(cfg.expr1 + " + " + cfg.expr2);
  }
  ExprDag g1 = parse_dag(cfg.expr1, names, ring);
  ExprDag g2 = parse_dag(cfg.expr2, names, ring);
  PitVerdict v = identity_test(g1, g2, cfg.samples, cfg.trials, cfg.seed);
  Json out = header("pit");
  out["ring"] = ring.to_string();
  out["variables"] = names;
  out["expr1"] = cfg.expr1;
  out["expr2"] = cfg.expr2;
  out["samples"] = v.samples_per_var;
  out["trials"] = v.trials;
  out["seed"] = v.seed;
  out["degree_bound"] = v.degree_bound_used;
  if (v.kind == PitVerdict::Kind::kNonzeroWitnessed) {
    out["verdict"] = "NonzeroWitnessed";
    out["witness_trial"] = v.witness_trial;
    out["point"] = json_point(v.point);
    out["value"] = exact(v.value);
  } else {
    out["verdict"] = "AllZero";
    out["failure_bound"] = exact(v.failure_bound);
    out["failure_bound_approx"] = v.failure_bound.convert_to<double>();
  }
  return out;
}

Json json_instance(const PuzzleInstance& inst) {
  Json j;
  j["a"] = inst.a;
  j["b"] = inst.b;
  j["u"] = inst.u;
  j["v"] = inst.v;
  AgreementPattern p = agreement_count(inst);
  Json cells = Json::array();
  for (const auto& [i, k] : p.cells) cells.push_back({i, k});
  j["cells"] = std::move(cells);
  j["product_table"] = product_table(inst);
  j["sum_table"] = sum_table(inst);
  j["k22_free"] = k22_check(p);
  return j;
}

Json cmd_puzzle_exhaustive(const Config& cfg) {
  ExhaustiveResult r = exhaustive_search(cfg.side, cfg.range, cfg.candidate_budget);
  Json out = header("puzzle exhaustive");
  out["s"] = cfg.side;
  out["range"] = cfg.range;
  out["candidates"] = r.candidates;
  out["count"] = r.count;
  out["k22_free_edge_bound"] = k22_free_edge_bound(cfg.side);
  out["best"] = json_instance(r.best);
  return out;
}

Json cmd_puzzle_local(const Config& cfg) {
  LocalSearchResult r = local_search(cfg.side, cfg.step_budget, cfg.seed);
  Json out = header("puzzle local");
  out["s"] = cfg.side;
  out["budget"] = cfg.step_budget;
  out["seed"] = r.seed;
  out["restarts"] = r.restarts;
  out["count"] = r.count;
  out["k22_free_edge_bound"] = k22_free_edge_bound(cfg.side);
  out["best"] = json_instance(r.best);
  Json history = Json::array();
  for (const auto& h : r.history) history.push_back({{"step", h.step}, {"restart", h.restart}, {"count", h.count}});
  out["history"] = std::move(history);
  return out;
}

Json cmd_tightness(const Config& cfg) {
  RingSpec ring = RingSpec::parse(cfg.ring);
  if (cfg.grid_path.empty()) throw Error(ErrorCode::kInvalidArgument, "--grid is required");
  GridSpec grid = GridSpec::parse(read_file(cfg.grid_path), ring);
  Exponents d(cfg.degrees.begin(), cfg.degrees.end());
  Polynomial f = tightness_family(grid, d);
  CountOptions opts;
  opts.grid_limit = cfg.limit_grid;
  CountResult counted = count_nonzeros(f, grid, opts);
  Int bound = product_bound(grid.sizes(), d);
  auto names = cfg.vars.empty() ? default_variable_names(grid.arity()) : split_names(cfg.vars);
  Json out = header("tightness");
  out["ring"] = ring.to_string();
  out["grid"] = json_grid(grid);
  out["degrees"] = d;
  out["polynomial"] = render(f, names);
  out["nonzero_count"] = counted.nonzeros;
  out["product_bound"] = exact(bound);
  out["slack"] = exact(Int(counted.nonzeros) - bound);
  return out;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "text") {
    flatten(j, "", out);
  } else {
    out << j.dump(2) << '\n';
  }
}

int emit_error(const std::string& code, const std::string& message, int exit_code,
               const std::string& format, std::ostream& out) {
  Json j;
  j["schema"] = kSchema;
  j["error"] = {{"code", code}, {"message", message}, {"exit_code", exit_code}};
  emit(j, format, out);
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Config cfg;
  CLI::App app{"Grid nonzero counting and polynomial hypothesis checks", "cnz"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--ring", cfg.ring, "fp:<p> | int | zmod:<m>");
  app.add_option("--grid", cfg.grid_path, "grid file, one comma-separated set per line");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--threads", cfg.threads, "worker threads (0 = OpenMP default)");
  app.add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--limit-grid", cfg.limit_grid, "largest grid to enumerate");
  app.add_option("--vars", cfg.vars, "comma-separated variable names");

  auto* analyze = app.add_subcommand("analyze", "hypothesis reports for a polynomial");
  analyze->add_option("polyfile", cfg.poly_path)->required();

  auto* bounds = app.add_subcommand("bounds", "applicable lower bounds");
  bounds->add_option("polyfile", cfg.poly_path);
  bounds->add_option("--sizes", cfg.sizes, "set sizes for the product-minimum bound")->delimiter(',');
  bounds->add_option("--caps", cfg.caps, "per-variable degree caps")->delimiter(',');
  bounds->add_option("--total", cfg.total, "total degree");
  bounds->add_option("--constraint", cfg.constraint, "equal | at-least");

  auto* verify = app.add_subcommand("verify", "count nonzeros and check every bound");
  verify->add_option("polyfile", cfg.poly_path)->required();
  verify->add_flag("--list-zeros", cfg.list_zeros, "list the zero points");

  auto* trim_cmd = app.add_subcommand("trim", "reduce modulo the vanishing polynomials");
  trim_cmd->add_option("polyfile", cfg.poly_path)->required();

  auto* coeff = app.add_subcommand("coeff", "coefficient of a maximal monomial from grid values");
  coeff->add_option("polyfile", cfg.poly_path)->required();
  coeff->add_option("--monomial", cfg.monomial, "exponents d1,d2,...")->delimiter(',')->required();

  auto* pit = app.add_subcommand("pit", "randomized identity test of two expressions");
  pit->add_option("expr1", cfg.expr1)->required();
  pit->add_option("expr2", cfg.expr2)->required();
  pit->add_option("--samples", cfg.samples, "sample set size s")->required();
  pit->add_option("--trials", cfg.trials, "number of trials");

  auto* puzzle = app.add_subcommand("puzzle", "multiplication/addition table agreements");
  puzzle->require_subcommand(1);
  auto* exhaustive = puzzle->add_subcommand("exhaustive", "exact search over a value range");
  exhaustive->add_option("--s", cfg.side, "side length")->required();
  exhaustive->add_option("--range", cfg.range, "value range R")->required();
  exhaustive->add_option("--budget", cfg.candidate_budget, "candidate limit");
  auto* local = puzzle->add_subcommand("local", "seeded hill climbing with restarts");
  local->add_option("--s", cfg.side, "side length")->required();
  local->add_option("--budget", cfg.step_budget, "step budget");

  auto* tightness = app.add_subcommand("tightness", "nonzero count of the extremal product polynomial");
  tightness->add_option("--degrees", cfg.degrees, "d1,d2,...")->delimiter(',')->required();

  std::vector<std::string> argv_store{"cnz"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), 1, cfg.format, out);
  }

  try {
    set_thread_count(cfg.threads);
    Json result;
    if (*analyze) result = cmd_analyze(cfg);
    else if (*bounds) result = cmd_bounds(cfg);
    else if (*verify) result = cmd_verify(cfg);
    else if (*trim_cmd) result = cmd_trim(cfg);
    else if (*coeff) result = cmd_coeff(cfg);
    else if (*pit) result = cmd_pit(cfg);
    else if (*exhaustive) result = cmd_puzzle_exhaustive(cfg);
    else if (*local) result = cmd_puzzle_local(cfg);
    else result = cmd_tightness(cfg);
    emit(result, cfg.format, out);
    return 0;
  } catch (const Error& e) {
    return emit_error(to_string(e.code()), e.what(), e.exit_code(), cfg.format, out);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), 1, cfg.format, out);
  }
}

}  // namespace cnz::cli

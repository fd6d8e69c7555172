#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "micut/errors.hpp"
#include "micut/game.hpp"
#include "micut/generators.hpp"
#include "micut/graph.hpp"
#include "micut/json_io.hpp"
#include "micut/rational.hpp"
#include "micut/reductions.hpp"
#include "micut/rng.hpp"
#include "micut/sat.hpp"
#include "micut/solvers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitPrecondition = 4;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << text;
}

micut::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw micut::ParseError(0, "cannot open graph file: " + path);
  return micut::parse_graph(in);
}

micut::Max2SatInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw micut::ParseError(0, "cannot open instance file: " + path);
  return micut::parse_instance(in);
}

struct GenOptions {
  std::string kind;
  int n = 0;
  int m = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  std::string text;
  if (opt.kind == "path") {
    text = micut::serialize_graph(micut::gen_path(opt.n));
  } else if (opt.kind == "cycle") {
    text = micut::serialize_graph(micut::gen_cycle(opt.n));
  } else if (opt.kind == "star") {
    text = micut::serialize_graph(micut::gen_star(opt.n));
  } else if (opt.kind == "gnp-graph") {
    text = micut::serialize_graph(micut::gen_gnp(opt.n, opt.p, opt.seed));
  } else {  // rand-m2sat
    text = micut::serialize_instance(micut::gen_rand_m2sat(opt.n, opt.m, opt.seed));
  }
  if (opt.out.empty())
    std::cout << text;
  else
    write_text(opt.out, text);
  return 0;
}

struct SolveOptions {
  std::string input;
  std::string algo = "exact";
  std::uint64_t seed = 0;
  int restarts = 10;
  int limit_exact = 30;
  bool human = false;
};

int run_solve(const SolveOptions& opt) {
  micut::Graph g = load_graph(opt.input);
  micut::IndependentCutSolution sol;
  std::optional<std::uint64_t> seed;
  if (opt.algo == "exact") {
    sol = micut::exact_micut(g, opt.limit_exact);
  } else if (opt.algo == "greedy") {
    sol = micut::greedy_micut(g);
  } else {
    sol = micut::local_search_micut(g, opt.seed, opt.restarts);
    seed = opt.seed;
  }
  if (opt.human) {
    std::cout << opt.algo << ": cut value " << sol.value << ", C = {";
    for (std::size_t k = 0; k < sol.set.members().size(); ++k)
      std::cout << (k ? "," : "") << sol.set.members()[k];
    std::cout << "}\n";
  } else {
    emit(micut::solution_to_json(sol, opt.algo, seed));
  }
  return 0;
}

struct ReduceOptions {
  std::string from;
  std::string input;
  std::string out;
  bool full_preprocess = false;
};

int run_reduce(const ReduceOptions& opt) {
  json summary;
  if (opt.from == "mis") {
    micut::Graph g = load_graph(opt.input);
    micut::Graph constructed = micut::reduce_mis_to_micut(g);
    std::vector<std::string> comments = {
        "reduction mis-to-micut",
        "original nodes 1.." + std::to_string(g.node_count()),
        "added clique " + std::to_string(g.node_count() + 1) + ".." +
            std::to_string(constructed.node_count()),
    };
    write_text(opt.out, micut::serialize_graph(constructed, comments));
    summary["from"] = "mis";
    summary["input"] = {{"nodes", g.node_count()}, {"edges", g.edge_count()}};
    summary["output"] = {{"nodes", constructed.node_count()},
                         {"edges", constructed.edge_count()},
                         {"path", opt.out}};
  } else {  // m2sat
    micut::Max2SatInstance raw = load_instance(opt.input);
    micut::Max2SatInstance inst;
    json pre;
    if (opt.full_preprocess) {
      micut::PreprocessReport report = micut::preprocess(raw);
      if (report.residual.variable_count == 0)
        throw micut::PreconditionError(
            "preprocessing emptied the instance; nothing to reduce");
      inst = report.residual;
      pre = micut::preprocess_report_to_json(report);
      pre["mode"] = "full";
    } else {
      // Tautology removal is the construction-critical half of preprocessing;
      // polarity forcing is opt-in because it changes the variable set.
      int removed = 0;
      std::vector<micut::Clause> kept;
      for (const auto& c : raw.clauses) {
        if (c.first == -c.second)
          ++removed;
        else
          kept.push_back(c);
      }
      inst = micut::Max2SatInstance::make(raw.variable_count, std::move(kept));
      pre = {{"mode", "tautologies-only"}, {"removed_tautologies", removed}};
    }
    micut::Max2SatReduction red = micut::reduce_2sat_to_micut(inst);
    std::vector<std::string> comments;
    comments.push_back("reduction m2sat-to-micut");
    for (int v = 1; v <= red.variable_count; ++v)
      comments.push_back("chief " + std::to_string(v) + " " + std::to_string(red.pos_chief(v)) +
                         " " + std::to_string(red.neg_chief(v)));
    for (const auto& gd : red.gadgets)
      comments.push_back("gadget " + std::to_string(gd.clause_index) + " " +
                         std::to_string(gd.chief1) + " " + std::to_string(gd.chief2) + " " +
                         std::to_string(gd.y1) + " " + std::to_string(gd.y2) + " " +
                         std::to_string(gd.y3));
    write_text(opt.out, micut::serialize_graph(red.graph, comments));
    summary["from"] = "m2sat";
    summary["preprocess"] = pre;
    summary["input"] = {{"variables", inst.variable_count}, {"clauses", inst.clause_count()}};
    json chiefs = json::object();
    for (int v = 1; v <= red.variable_count; ++v)
      chiefs[std::to_string(v)] = {red.pos_chief(v), red.neg_chief(v)};
    json gadgets = json::array();
    for (const auto& gd : red.gadgets)
      gadgets.push_back({{"clause", gd.clause_index},
                         {"chiefs", {gd.chief1, gd.chief2}},
                         {"accessories", {gd.y1, gd.y2, gd.y3}}});
    summary["output"] = {{"nodes", red.graph.node_count()},
                         {"edges", red.graph.edge_count()},
                         {"max_degree", micut::max_degree(red.graph)},
                         {"path", opt.out},
                         {"chief_nodes", chiefs},
                         {"gadgets", gadgets}};
  }
  emit(summary);
  return 0;
}

struct DynamicsOptions {
  std::string input;
  std::string pi_a;
  std::string pi_b;
  std::string schedule = "roundrobin";
  std::string start = "all-A";
  std::uint64_t seed = 0;
  bool human = false;
};

int run_dynamics(const DynamicsOptions& opt) {
  micut::Graph g = load_graph(opt.input);
  micut::Rational pi_a, pi_b;
  try {
    pi_a = micut::parse_rational(opt.pi_a);
    pi_b = micut::parse_rational(opt.pi_b);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad payoff: ") + e.what());
  }
  if (!pi_a.is_positive() || !pi_b.is_positive())
    throw std::invalid_argument("pi-a and pi-b must be positive");
  micut::GameParams params = micut::GameParams::from_relative(pi_a, pi_b);

  micut::ActionProfile start(static_cast<std::size_t>(g.node_count()), micut::Action::A);
  if (opt.start == "all-B") {
    std::fill(start.begin(), start.end(), micut::Action::B);
  } else if (opt.start == "random") {
    micut::Rng rng(opt.seed);
    for (auto& a : start) a = rng.below(2) ? micut::Action::B : micut::Action::A;
  }

  micut::DynamicsTrace trace = micut::best_response_dynamics(
      g, start, params, micut::schedule_from_string(opt.schedule), opt.seed);

  json j = micut::trace_to_json(trace);
  j["final_is_nash"] = micut::is_nash(g, trace.final_profile, params);
  bool polar_regime = pi_a > micut::Rational(g.edge_count()) * pi_b;
  if (polar_regime)
    j["final_is_polar_equilibrium"] = micut::is_polar_equilibrium(g, trace.final_profile);
  if (opt.human) {
    std::cout << "steps: " << trace.step_count << "\nfinal: "
              << micut::profile_to_string(trace.final_profile)
              << "\nnash: " << (j["final_is_nash"].get<bool>() ? "yes" : "no") << '\n';
    if (polar_regime)
      std::cout << "polar equilibrium: "
                << (j["final_is_polar_equilibrium"].get<bool>() ? "yes" : "no") << '\n';
  } else {
    emit(j);
  }
  return 0;
}

struct VerifyOptions {
  std::string suite;
  int count = 0;  // 0: per-suite default
  int max_n = 0;
  std::uint64_t seed = 0;
  int limit_sat = 20;
};

json verify_eq12(int count, int max_n, std::uint64_t seed, int limit_sat, json& failures) {
  int checked = 0;
  std::uint64_t attempt = 0;
  json stats = json::object();
  while (checked < count) {
    std::uint64_t sub = micut::Rng::derive(seed, attempt++);
    micut::Rng rng(sub);
    int n = rng.range(2, max_n);
    int m = rng.range(1, std::min(10, 3 * n));
    micut::Max2SatInstance raw = micut::gen_rand_m2sat(n, m, sub);
    micut::PreprocessReport report = micut::preprocess(raw);
    const micut::Max2SatInstance& inst = report.residual;
    if (inst.variable_count == 0 || inst.clause_count() == 0) continue;
    micut::ReductionCertificate cert = micut::check_certificate(inst, 8, sub, limit_sat);
    if (!cert.all_hold()) {
      failures.push_back({{"seed", sub},
                          {"instance", micut::serialize_instance(inst)},
                          {"certificate", micut::certificate_to_json(cert)}});
    }
    ++checked;
  }
  stats["checked"] = checked;
  return stats;
}

json verify_thm1(int count, int max_n, std::uint64_t seed, json& failures) {
  int checked = 0;
  std::uint64_t attempt = 0;
  while (checked < count) {
    std::uint64_t sub = micut::Rng::derive(seed, attempt++);
    micut::Rng rng(sub);
    int n = rng.range(2, max_n);
    double p = 0.2 + 0.6 * rng.unit();
    micut::Graph g = micut::gen_gnp(n, p, sub);
    if (g.is_complete()) continue;
    micut::Graph constructed = micut::reduce_mis_to_micut(g);
    micut::IndependentCutSolution opt = micut::exact_micut(constructed, 64);
    bool ok = true;
    std::string reason;
    try {
      micut::NodeSet recovered = micut::recover_mis(g, opt);
      long long expect_value = 0;
      for (int v : recovered.members())
        expect_value += static_cast<long long>(n) * n + g.degree(v);
      if (opt.value != expect_value) {
        ok = false;
        reason = "optimal cut value mismatch";
      }
    } catch (const std::exception& e) {
      ok = false;
      reason = e.what();
    }
    if (!ok)
      failures.push_back(
          {{"seed", sub}, {"graph", micut::serialize_graph(g)}, {"reason", reason}});
    ++checked;
  }
  return {{"checked", checked}};
}

json verify_gadget(json& failures) {
  micut::Max2SatInstance single = micut::parse_instance("p m2sat 2 1\n1 2\n");
  micut::Max2SatReduction red = micut::reduce_2sat_to_micut(single);
  const micut::Gadget& gd = red.gadgets.at(0);
  std::vector<micut::Graph::Edge> gadget_edges = {
      {gd.y1, gd.y2}, {gd.y2, gd.y3}, {gd.y1, gd.y3}, {gd.chief1, gd.y1}, {gd.chief2, gd.y2}};
  for (auto& [u, v] : gadget_edges)
    if (u > v) std::swap(u, v);

  int seen_case[5] = {0, 0, 0, 0, 0};
  micut::for_each_maximal_independent_set(red.graph, [&](std::uint64_t mask) {
    auto in = [&](int node) { return (mask >> (node - 1)) & 1; };
    int contribution = 0;
    for (const auto& [u, v] : gadget_edges)
      if (in(u) != in(v)) ++contribution;
    bool c1 = in(gd.chief1), c2 = in(gd.chief2);
    bool ok = true;
    if (c1 && c2) {
      seen_case[1]++;
      ok = in(gd.y3) && contribution == 4;
    } else if (c1 && !c2) {
      seen_case[2]++;
      ok = (in(gd.y2) || in(gd.y3)) && (contribution == (in(gd.y2) ? 4 : 3));
    } else if (!c1 && c2) {
      seen_case[3]++;
      ok = (in(gd.y1) || in(gd.y3)) && (contribution == (in(gd.y1) ? 4 : 3));
    } else {
      seen_case[4]++;
      ok = (in(gd.y1) || in(gd.y2) || in(gd.y3)) && (contribution == (in(gd.y3) ? 2 : 3));
    }
    if (!ok)
      failures.push_back({{"set", micut::set_from_mask(mask).members()},
                          {"contribution", contribution}});
  });
  for (int k = 1; k <= 4; ++k)
    if (seen_case[k] == 0) failures.push_back({{"reason", "case " + std::to_string(k) + " never occurred"}});
  return {{"cases", {seen_case[1], seen_case[2], seen_case[3], seen_case[4]}}};
}

json verify_polar(int count, int max_n, std::uint64_t seed, json& failures) {
  int checked = 0;
  std::uint64_t attempt = 0;
  while (checked < count) {
    std::uint64_t sub = micut::Rng::derive(seed, attempt++);
    micut::Rng rng(sub);
    int n = rng.range(2, max_n);
    micut::Graph g = micut::gen_connected_gnp(n, 0.35, sub);
    micut::GameParams polar = micut::polar_params(g, micut::Rational(1));
    micut::ActionProfile s(static_cast<std::size_t>(n), micut::Action::A);
    for (std::uint64_t profile = 0; profile < (std::uint64_t{1} << n); ++profile) {
      for (int v = 1; v <= n; ++v)
        s[v - 1] = (profile >> (v - 1)) & 1 ? micut::Action::B : micut::Action::A;
      if (micut::is_nash(g, s, polar) != micut::is_polar_equilibrium(g, s)) {
        failures.push_back({{"seed", sub},
                            {"graph", micut::serialize_graph(g)},
                            {"profile", micut::profile_to_string(s)}});
      }
    }
    ++checked;
  }
  return {{"checked", checked}};
}

int run_verify(const VerifyOptions& opt) {
  json failures = json::array();
  json stats;
  int count = opt.count, max_n = opt.max_n;
  if (opt.suite == "eq12") {
    if (count == 0) count = 100;
    if (max_n == 0) max_n = 6;
    stats = verify_eq12(count, max_n, opt.seed, opt.limit_sat, failures);
  } else if (opt.suite == "thm1") {
    if (count == 0) count = 50;
    if (max_n == 0) max_n = 6;
    stats = verify_thm1(count, max_n, opt.seed, failures);
  } else if (opt.suite == "gadget") {
    stats = verify_gadget(failures);
  } else {  // polar
    if (count == 0) count = 20;
    if (max_n == 0) max_n = 10;
    stats = verify_polar(count, max_n, opt.seed, failures);
  }
  json report;
  report["suite"] = opt.suite;
  report["seed"] = opt.seed;
  report["stats"] = stats;
  report["passed"] = failures.empty();
  report["failures"] = failures;
  emit(report);
  return failures.empty() ? 0 : 1;
}

struct BenchOptions {
  std::string dir;
  std::string algos = "exact,greedy,local";
  std::uint64_t seed = 0;
  int restarts = 10;
  int limit_exact = 30;
  std::string format = "json";
  bool no_time = false;
};

int run_bench(const BenchOptions& opt) {
  std::vector<std::string> algos;
  {
    std::stringstream ss(opt.algos);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item != "exact" && item != "greedy" && item != "local")
        throw std::invalid_argument("unknown algorithm '" + item + "'");
      algos.push_back(item);
    }
  }
  if (algos.empty()) throw std::invalid_argument("no algorithms selected");
  std::vector<fs::path> files;
  if (!fs::is_directory(opt.dir)) throw std::invalid_argument("not a directory: " + opt.dir);
  for (const auto& entry : fs::directory_iterator(opt.dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  if (files.empty()) throw std::invalid_argument("no instance files in " + opt.dir);
  std::sort(files.begin(), files.end());

  json rows = json::array();
  for (const auto& path : files) {
    micut::Graph g = load_graph(path.string());
    json row;
    row["file"] = path.filename().string();
    row["n"] = g.node_count();
    row["m"] = g.edge_count();
    std::optional<int> exact_value;
    json results = json::object();
    for (const std::string& algo : algos) {
      auto t0 = std::chrono::steady_clock::now();
      json cell;
      try {
        micut::IndependentCutSolution sol;
        if (algo == "exact")
          sol = micut::exact_micut(g, opt.limit_exact);
        else if (algo == "greedy")
          sol = micut::greedy_micut(g);
        else
          sol = micut::local_search_micut(g, opt.seed, opt.restarts);
        cell["value"] = sol.value;
        if (algo == "exact") exact_value = sol.value;
      } catch (const micut::LimitError&) {
        cell["skipped"] = "over exhaustive limit";
      }
      if (!opt.no_time) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        cell["time_ms"] = std::round(ms * 1000.0) / 1000.0;
      }
      results[algo] = std::move(cell);
    }
    if (exact_value)
      for (const std::string& algo : algos)
        if (results[algo].contains("value"))
          results[algo]["gap"] = *exact_value - results[algo]["value"].get<int>();
    row["results"] = std::move(results);
    rows.push_back(std::move(row));
  }

  if (opt.format == "csv") {
    std::cout << "file,n,m,algorithm,value,gap,time_ms\n";
    for (const auto& row : rows) {
      for (const std::string& algo : algos) {
        const json& cell = row["results"][algo];
        std::cout << row["file"].get<std::string>() << ',' << row["n"] << ',' << row["m"] << ','
                  << algo << ',';
        if (cell.contains("value")) std::cout << cell["value"];
        std::cout << ',';
        if (cell.contains("gap")) std::cout << cell["gap"];
        std::cout << ',';
        if (cell.contains("time_ms")) std::cout << cell["time_ms"].get<double>();
        std::cout << '\n';
      }
    }
  } else {
    emit(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum independent cut toolkit: anti-coordination game dynamics, solvers, "
               "and hardness-reduction certificates"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate graph or m2sat instances");
  cmd_gen->add_option("kind", gen.kind, "gnp-graph|cycle|path|star|rand-m2sat")
      ->required()
      ->check(CLI::IsMember({"gnp-graph", "cycle", "path", "star", "rand-m2sat"}));
  cmd_gen->add_option("--n", gen.n, "node/variable count")->required();
  cmd_gen->add_option("--m", gen.m, "clause count (rand-m2sat)");
  cmd_gen->add_option("--p", gen.p, "edge probability (gnp-graph)");
  cmd_gen->add_option("--seed", gen.seed, "random seed")->default_val(0);
  cmd_gen->add_option("--out", gen.out, "output path (default stdout)");

  SolveOptions solve;
  auto* cmd_solve = app.add_subcommand("solve", "solve maximum independent cut");
  cmd_solve->add_option("--in", solve.input, "DIMACS graph file")->required();
  cmd_solve->add_option("--algo", solve.algo, "exact|greedy|local")
      ->check(CLI::IsMember({"exact", "greedy", "local"}))
      ->default_val("exact");
  cmd_solve->add_option("--seed", solve.seed, "random seed (local)")->default_val(0);
  cmd_solve->add_option("--restarts", solve.restarts, "local-search restarts")->default_val(10);
  cmd_solve->add_option("--limit-exact", solve.limit_exact, "exhaustive node limit")
      ->default_val(30);
  cmd_solve->add_flag("--human", solve.human, "human-readable output");
  cmd_solve->add_flag("--json", "JSON output (the default)");

  ReduceOptions reduce;
  auto* cmd_reduce = app.add_subcommand("reduce", "construct a hardness-reduction instance");
  cmd_reduce->add_option("--from", reduce.from, "mis|m2sat")
      ->required()
      ->check(CLI::IsMember({"mis", "m2sat"}));
  cmd_reduce->add_option("--in", reduce.input, "input file")->required();
  cmd_reduce->add_option("--out", reduce.out, "output DIMACS path")->required();
  cmd_reduce->add_flag("--full-preprocess", reduce.full_preprocess,
                       "apply polarity-forcing preprocessing before the construction");

  DynamicsOptions dyn;
  auto* cmd_dyn = app.add_subcommand("dynamics", "run asynchronous best-response dynamics");
  cmd_dyn->add_option("--in", dyn.input, "DIMACS graph file")->required();
  cmd_dyn->add_option("--pi-a", dyn.pi_a, "relative payoff pi_A (integer or a/b)")->required();
  cmd_dyn->add_option("--pi-b", dyn.pi_b, "relative payoff pi_B (integer or a/b)")->required();
  cmd_dyn->add_option("--schedule", dyn.schedule, "roundrobin|random")
      ->check(CLI::IsMember({"roundrobin", "random"}))
      ->default_val("roundrobin");
  cmd_dyn->add_option("--start", dyn.start, "all-A|all-B|random")
      ->check(CLI::IsMember({"all-A", "all-B", "random"}))
      ->default_val("all-A");
  cmd_dyn->add_option("--seed", dyn.seed, "random seed")->default_val(0);
  cmd_dyn->add_flag("--human", dyn.human, "human-readable output");
  cmd_dyn->add_flag("--json", "JSON output (the default)");

  VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand("verify", "run a property suite against the oracles");
  cmd_verify->add_option("--suite", verify.suite, "eq12|thm1|gadget|polar")
      ->required()
      ->check(CLI::IsMember({"eq12", "thm1", "gadget", "polar"}));
  cmd_verify->add_option("--count", verify.count, "instances to draw (0 = suite default)")
      ->default_val(0);
  cmd_verify->add_option("--max-n", verify.max_n, "size bound (0 = suite default)")
      ->default_val(0);
  cmd_verify->add_option("--seed", verify.seed, "random seed")->default_val(0);
  cmd_verify->add_option("--limit-sat", verify.limit_sat, "brute-force variable limit")
      ->default_val(20);
  cmd_verify->add_flag("--json", "JSON output (the default)");

  BenchOptions bench;
  auto* cmd_bench = app.add_subcommand("bench", "compare solvers over a directory of graphs");
  cmd_bench->add_option("--dir", bench.dir, "directory of DIMACS files")->required();
  cmd_bench->add_option("--algos", bench.algos, "comma list of exact,greedy,local")
      ->default_val("exact,greedy,local");
  cmd_bench->add_option("--seed", bench.seed, "random seed (local)")->default_val(0);
  cmd_bench->add_option("--restarts", bench.restarts, "local-search restarts")->default_val(10);
  cmd_bench->add_option("--limit-exact", bench.limit_exact, "exhaustive node limit")
      ->default_val(30);
  cmd_bench->add_option("--format", bench.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  cmd_bench->add_flag("--no-time", bench.no_time, "omit wall times (byte-reproducible output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_gen) return run_gen(gen);
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_reduce) return run_reduce(reduce);
    if (*cmd_dyn) return run_dynamics(dyn);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_bench) return run_bench(bench);
  } catch (const micut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const micut::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const micut::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

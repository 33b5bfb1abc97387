// qcsolve: command-line front end for the maxqc library.
//
// Exit codes: 0 success (optimal), 2 time limit hit, 1 usage or IO error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxqc/bench.hpp"
#include "maxqc/bounds.hpp"
#include "maxqc/gen.hpp"
#include "maxqc/iterqc.hpp"
#include "maxqc/kplex.hpp"
#include "maxqc/oracle.hpp"

namespace {

using namespace maxqc;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;

Gamma solver_gamma(const std::string& text) {
  Gamma g = Gamma::parse(text);
  if (!g.in_solver_range()) throw std::invalid_argument("--gamma must lie in [0.5, 1], got " + text);
  return g;
}

std::string labels(const Graph& g, const VertexSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << g.label(s[i]);
  return out.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct SolveArgs {
  std::string path;
  std::string gamma;
  std::string format = "auto";
  std::string mode = "improved";
  bool no_preprocess = false;
  bool no_pseudo_lb = false;
  std::optional<double> time_limit;
  bool json = false;
  bool print_vertices = false;
  std::size_t heuristic_starts = 100;
};

int cmd_solve(const SolveArgs& a) {
  const Gamma gamma = solver_gamma(a.gamma);
  const Graph g = load_graph(a.path, parse_graph_format(a.format));
  SolveOptions opts;
  opts.mode = parse_search_mode(a.mode);
  opts.use_preprocessing = !a.no_preprocess;
  opts.use_pseudo_lb = !a.no_pseudo_lb;
  opts.time_limit = a.time_limit;
  opts.heuristic_starts = a.heuristic_starts;
  const SolveResult r = solve(g, gamma, opts);

  if (a.json) {
    std::cout << to_json(r, g, 2) << '\n';
  } else {
    if (r.optimal) {
      std::cout << "s*=" << r.s_star << '\n';
    } else {
      std::cout << "TIMEOUT best-known s=" << r.s_star << " (not proven optimal)\n";
    }
    std::cout << "graph n=" << g.n() << " m=" << g.m() << " gamma=" << gamma.str() << " mode=" << to_string(opts.mode)
              << (opts.use_preprocessing ? "" : " no-preprocess") << (opts.use_pseudo_lb ? "" : " no-pseudo-lb")
              << '\n';
    if (r.preprocessed) {
      std::cout << "lb=" << r.bounds.lb << " ub=" << r.bounds.ub << " max_core=" << r.bounds.max_core << '\n';
      std::cout << "Red-V=" << r.reduction.red_v_pct << "% Red-E=" << r.reduction.red_e_pct << "%"
                << (r.short_circuit ? " (solved by preprocessing)" : "") << '\n';
    }
    for (const auto& e : r.trace) {
      std::cout << "  iter " << e.i << ": k=" << e.k << " s=" << e.s;
      if (e.pseudo_lb) std::cout << " pseudo_lb=" << *e.pseudo_lb << " pseudo_size=" << *e.pseudo_size;
      std::cout << " (" << e.ms << " ms)\n";
    }
    std::cout << "time " << r.total_ms << " ms\n";
    if (a.print_vertices) std::cout << "vertices: " << labels(g, r.witness) << '\n';
  }
  return r.optimal ? kExitOk : kExitTimeout;
}

int cmd_bounds(const std::string& path, const std::string& gamma_text, const std::string& format) {
  const Gamma gamma = solver_gamma(gamma_text);
  const Graph g = load_graph(path, parse_graph_format(format));
  const BoundsResult b = get_bounds(g, gamma);
  std::cout << "lb=" << b.lb << " ub=" << b.ub << '\n';
  std::cout << "max_core=" << b.max_core << " n=" << g.n() << " m=" << g.m() << " density=" << g.density() << '\n';
  if (b.lb > 0) {
    const ReducedGraph red = reduce_graph(g, gamma, b.lb);
    std::cout << "Red-V=" << red.stats.red_v_pct << "% Red-E=" << red.stats.red_e_pct << "%\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& path, const std::optional<std::string>& gamma_text, std::optional<int> k,
               const std::string& format, VertexId max_n, bool json) {
  const Graph g = load_graph(path, parse_graph_format(format));
  const OracleLimit limit{max_n};
  const auto t0 = std::chrono::steady_clock::now();
  OracleResult r;
  if (k) {
    r = brute_max_kplex(g, *k, limit);
  } else {
    r = brute_max_qc(g, solver_gamma(*gamma_text), limit);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (json) {
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (VertexId v : r.members) witness.push_back(g.label(v));
    nlohmann::ordered_json out = {{"s_star", r.size},  {"witness", witness}, {"optimal", true},
                          {"trace", nlohmann::ordered_json::array()},   {"lb", r.size},      {"ub", r.size},
                          {"red_v_pct", 0.0},  {"red_e_pct", 0.0},  {"total_ms", ms}, {"method", "brute"}};
    if (k) {
      out["k"] = *k;
    } else {
      out["gamma"] = Gamma::parse(*gamma_text).to_double();
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (k ? "max k-plex=" : "s*=") << r.size << '\n' << "vertices: " << labels(g, r.members) << '\n';
  }
  return kExitOk;
}

int cmd_kplex(const std::string& path, int k, std::int64_t floor_bound, const std::string& format, bool qc_context) {
  const Graph g = load_graph(path, parse_graph_format(format));
  if (k < 1) throw std::invalid_argument("--k must be >= 1");
  if (floor_bound < 1) throw std::invalid_argument("--floor must be >= 1");
  PlexOptions opts;
  opts.qc_context = qc_context;
  const VertexSet s = plex_brb(g, k, floor_bound, opts);
  if (s.empty()) {
    std::cout << "none of size >= " << floor_bound << '\n';
  } else {
    std::cout << "size=" << s.size() << '\n' << "vertices: " << labels(g, s) << '\n';
  }
  return kExitOk;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path) {
  const Graph g = generate(spec);
  const std::vector<std::string> header{manifest(spec)};
  if (out_path.empty() || out_path == "-") {
    write_edgelist(std::cout, g, header);
  } else {
    save_edgelist(out_path, g, header);
    std::cerr << "wrote " << out_path << " n=" << g.n() << " m=" << g.m() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum gamma-quasi-clique solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a maximum gamma-quasi-clique");
  solve->add_option("path", solve_args.path, "Graph file")->required();
  solve->add_option("--gamma", solve_args.gamma, "Density in [0.5, 1]")->required();
  solve->add_option("--format", solve_args.format, "auto, edgelist or metis");
  solve->add_option("--mode", solve_args.mode, "improved or basic");
  solve->add_flag("--no-preprocess", solve_args.no_preprocess, "Skip peeling bounds and reduction");
  solve->add_flag("--no-pseudo-lb", solve_args.no_pseudo_lb, "Use the heuristic size as branch-and-bound floor");
  solve->add_option("--time-limit", solve_args.time_limit, "Seconds");
  solve->add_flag("--json", solve_args.json, "Print the result as JSON");
  solve->add_flag("--print-vertices", solve_args.print_vertices, "List the witness vertices");
  solve->add_option("--heuristic-starts", solve_args.heuristic_starts, "Greedy k-plex starts");

  std::vector<std::string> bench_inputs;
  std::string bench_gammas = "0.75";
  std::string bench_variants = "iterqc,no-pp,no-plb";
  std::optional<double> bench_timeout;
  unsigned bench_jobs = 1;
  std::string bench_csv;
  std::string bench_scales;
  std::uint64_t bench_scale_seed = 1;
  std::string bench_format = "auto";
  auto* bench = app.add_subcommand("bench", "Run the solver over a graph collection and write CSV");
  bench->add_option("inputs", bench_inputs, "Graph files, directories, or @list files")->required();
  bench->add_option("--gammas", bench_gammas, "Comma-separated gamma values");
  bench->add_option("--variants", bench_variants, "Comma-separated: iterqc, no-pp, no-plb, basic");
  bench->add_option("--timeout", bench_timeout, "Seconds per run (default QC_TIME_LIMIT or 10800)");
  bench->add_option("--jobs", bench_jobs, "Concurrent solver runs");
  bench->add_option("--csv", bench_csv, "Append rows to this CSV file");
  bench->add_option("--scale", bench_scales, "Comma-separated sampling ratios in (0, 1]");
  bench->add_option("--scale-seed", bench_scale_seed, "Seed for vertex sampling");
  bench->add_option("--format", bench_format, "auto, edgelist or metis");

  std::string bounds_path, bounds_gamma, bounds_format = "auto";
  auto* bounds = app.add_subcommand("bounds", "Peeling lower and upper bounds");
  bounds->add_option("path", bounds_path, "Graph file")->required();
  bounds->add_option("--gamma", bounds_gamma, "Density in [0.5, 1]")->required();
  bounds->add_option("--format", bounds_format, "auto, edgelist or metis");

  std::string oracle_path, oracle_format = "auto";
  std::optional<std::string> oracle_gamma;
  std::optional<int> oracle_k;
  VertexId oracle_max_n = 20;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force maximum quasi-clique or k-plex (small graphs)");
  oracle->add_option("path", oracle_path, "Graph file")->required();
  auto* og = oracle->add_option("--gamma", oracle_gamma, "Density in [0.5, 1]");
  auto* ok = oracle->add_option("--k", oracle_k, "Solve maximum k-plex instead");
  og->excludes(ok);
  oracle->add_option("--max-n", oracle_max_n, "Vertex limit (at most 26)");
  oracle->add_option("--format", oracle_format, "auto, edgelist or metis");
  oracle->add_flag("--json", oracle_json, "Print the result as JSON");

  std::string kplex_path, kplex_format = "auto";
  int kplex_k = 1;
  std::int64_t kplex_floor = 1;
  bool kplex_qc = false;
  auto* kplex = app.add_subcommand("kplex", "Maximum k-plex by branch-and-bound");
  kplex->add_option("path", kplex_path, "Graph file")->required();
  kplex->add_option("--k", kplex_k, "Plex parameter")->required();
  kplex->add_option("--floor", kplex_floor, "Only report plexes at least this large");
  kplex->add_option("--format", kplex_format, "auto, edgelist or metis");
  kplex->add_flag("--qc-context", kplex_qc, "Restrict to plexes of diameter <= 2 around their first vertex");

  GenSpec sf_spec{GenModel::kScaleFree, 0, 0, 0, 0.0, 1};
  GenSpec sw_spec{GenModel::kSmallWorld, 0, 0, 0, 0.0, 1};
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph");
  gen->require_subcommand(1);
  auto* sf = gen->add_subcommand("sf", "Barabasi-Albert scale-free graph");
  sf->add_option("--n", sf_spec.n, "Vertices")->required();
  sf->add_option("--w", sf_spec.w, "Edges per new vertex")->required();
  sf->add_option("--seed", sf_spec.seed, "RNG seed");
  sf->add_option("-o,--output", gen_out, "Output edgelist (default stdout)");
  auto* sw = gen->add_subcommand("sw", "Watts-Strogatz small-world graph");
  sw->add_option("--n", sw_spec.n, "Vertices")->required();
  sw->add_option("--d", sw_spec.d, "Ring neighbors")->required();
  sw->add_option("--p", sw_spec.p, "Rewiring probability")->required();
  sw->add_option("--seed", sw_spec.seed, "RNG seed");
  sw->add_option("-o,--output", gen_out, "Output edgelist (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*bounds) return cmd_bounds(bounds_path, bounds_gamma, bounds_format);
    if (*oracle) {
      if (!oracle_gamma && !oracle_k) throw std::invalid_argument("oracle needs --gamma or --k");
      return cmd_oracle(oracle_path, oracle_gamma, oracle_k, oracle_format, oracle_max_n, oracle_json);
    }
    if (*kplex) return cmd_kplex(kplex_path, kplex_k, kplex_floor, kplex_format, kplex_qc);
    if (*sf) return cmd_gen(sf_spec, gen_out);
    if (*sw) return cmd_gen(sw_spec, gen_out);
    if (*bench) {
      BenchConfig config;
      config.graphs = expand_inputs(bench_inputs);
      config.format = parse_graph_format(bench_format);
      config.gammas = split_list(bench_gammas);
      config.variants.clear();
      for (const auto& v : split_list(bench_variants)) config.variants.push_back(parse_variant(v));
      if (config.gammas.empty() || config.variants.empty()) throw std::invalid_argument("empty --gammas or --variants");
      config.timeout_s = bench_timeout.value_or(default_timeout_seconds());
      config.jobs = bench_jobs;
      for (const auto& s : split_list(bench_scales)) config.scales.push_back(std::stod(s));
      config.scale_seed = bench_scale_seed;
      if (!bench_csv.empty()) config.csv = bench_csv;
      const BenchSummary summary = run_bench(config, &std::cerr);
      print_summary(std::cout, summary, config);
      return summary.consistent() ? kExitOk : kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

#include "maxqc/iterqc.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace maxqc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

using Offer = std::function<void(const VertexSet&)>;

void check_iteration_budget(std::size_t iterations, std::int64_t start) {
  // Each non-final step strictly lowers s, so start + 1 steps always suffice.
  if (static_cast<std::int64_t>(iterations) > start + 1) {
    throw std::logic_error("iterative search failed to terminate; k-plex contract violated");
  }
}

void run_basic(PlexSolver& solver, const Gamma& gamma, IterationResult& out, const Offer& offer) {
  const Graph& g = solver.graph();
  if (g.empty()) return;
  std::int64_t prev = g.n();
  for (int i = 1;; ++i) {
    check_iteration_budget(out.trace.size(), g.n());
    const auto t0 = Clock::now();
    const int k = get_k(prev, gamma);
    VertexSet plex = solver.branch_and_bound(k, 1);
    const auto s = static_cast<std::int64_t>(plex.size());
    out.trace.push_back({i, k, s, std::nullopt, std::nullopt, std::nullopt, ms_since(t0)});
    if (offer) offer(plex);
    if (k == get_k(s, gamma)) {
      out.s_star = s;
      out.witness = std::move(plex);
      return;
    }
    prev = s;
  }
}

void run_improved(PlexSolver& solver, const Gamma& gamma, std::int64_t ub, bool use_pseudo_lb,
                  IterationResult& out, const Offer& offer) {
  const Graph& g = solver.graph();
  if (g.empty()) return;
  if (ub < 1) throw std::invalid_argument("improved_iter_search: ub must be >= 1");
  std::int64_t prev = ub;
  for (int i = 1;; ++i) {
    check_iteration_budget(out.trace.size(), ub);
    const auto t0 = Clock::now();
    const int k = get_k(prev, gamma);
    PlexOutcome r = plex_search(solver, k, prev, use_pseudo_lb);
    const std::int64_t s = std::max(r.pseudo_lb, r.pseudo_size);
    out.trace.push_back({i, k, s, r.lb_plex, r.pseudo_lb, r.pseudo_size, ms_since(t0)});
    if (offer && !r.witness.empty()) offer(r.witness);
    if (k == get_k(s, gamma) && r.pseudo_size >= r.pseudo_lb) {
      out.s_star = s;
      out.witness = std::move(r.witness);
      return;
    }
    prev = s;
  }
}

PlexOptions plex_options(const IterationOptions& o) {
  PlexOptions p;
  p.heuristic_starts = o.heuristic_starts;
  p.qc_context = o.qc_context;
  p.deadline = o.deadline;
  return p;
}

}  // namespace

int get_k(std::int64_t x, const Gamma& gamma) {
  if (x < 1) throw std::invalid_argument("get_k: x must be >= 1");
  return static_cast<int>(gamma.floor_complement_times(x - 1) + 1);
}

std::string to_string(SearchMode mode) { return mode == SearchMode::kBasic ? "basic" : "improved"; }

SearchMode parse_search_mode(std::string_view name) {
  if (name == "basic") return SearchMode::kBasic;
  if (name == "improved") return SearchMode::kImproved;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (basic, improved)");
}

IterationResult basic_iterate(const Graph& g, const Gamma& gamma, const IterationOptions& options) {
  if (g.empty()) throw std::invalid_argument("basic_iterate: empty graph");
  PlexSolver solver(g, plex_options(options));
  IterationResult out;
  run_basic(solver, gamma, out, {});
  return out;
}

IterationResult improved_iter_search(const Graph& g, const Gamma& gamma, std::int64_t ub,
                                     const IterationOptions& options, bool use_pseudo_lb) {
  IterationResult out;
  if (g.empty()) return out;
  PlexSolver solver(g, plex_options(options));
  run_improved(solver, gamma, ub, use_pseudo_lb, out, {});
  return out;
}

SolveResult solve(const Graph& g, const Gamma& gamma, const SolveOptions& options) {
  if (!gamma.in_solver_range()) {
    throw std::invalid_argument("gamma must lie in [0.5, 1], got " + gamma.str());
  }
  const auto t0 = Clock::now();
  SolveResult result;
  result.gamma = gamma;
  result.options = options;
  result.reduced_n = g.n();
  result.reduced_m = g.m();

  if (g.empty()) {
    result.optimal = true;
    result.total_ms = ms_since(t0);
    return result;
  }

  IterationOptions iter;
  iter.heuristic_starts = options.heuristic_starts;
  iter.qc_context = options.qc_context;
  if (options.time_limit) iter.deadline = Deadline::after(std::chrono::duration<double>(*options.time_limit));

  // Best quasi-clique known so far, in ids of g; reported on timeout.
  VertexSet best_known{0};

  Graph reduced_storage;
  const Graph* work = &g;
  std::vector<VertexId> to_parent;
  std::int64_t ub = g.n();

  if (options.use_preprocessing) {
    result.preprocessed = true;
    result.bounds = get_bounds(g, gamma);
    best_known = result.bounds.lb_witness;
    ub = result.bounds.ub;
    if (result.bounds.lb == result.bounds.ub) {
      result.short_circuit = true;
      result.s_star = result.bounds.lb;
      result.witness = result.bounds.lb_witness;
      result.optimal = true;
      result.reduction.red_v_pct = 100.0;
      result.reduction.red_e_pct = 100.0;
      result.reduction.removed_vertices = g.n();
      result.reduction.removed_edges = g.m();
      result.reduced_n = 0;
      result.reduced_m = 0;
      result.total_ms = ms_since(t0);
      return result;
    }
    ReducedGraph reduced = reduce_graph(g, gamma, result.bounds.lb);
    result.reduction = reduced.stats;
    reduced_storage = std::move(reduced.graph);
    to_parent = std::move(reduced.to_parent);
    work = &reduced_storage;
    result.reduced_n = work->n();
    result.reduced_m = work->m();
  }

  auto to_input_ids = [&](const VertexSet& s) {
    if (to_parent.empty()) return s;
    VertexSet mapped;
    mapped.reserve(s.size());
    for (VertexId v : s) mapped.push_back(to_parent[v]);
    std::sort(mapped.begin(), mapped.end());
    return mapped;
  };
  Offer offer = [&](const VertexSet& s) {
    if (s.size() > best_known.size() && is_quasi_clique(*work, s, gamma)) best_known = to_input_ids(s);
  };

  PlexSolver solver(*work, plex_options(iter));
  IterationResult it;
  try {
    if (options.mode == SearchMode::kBasic) {
      run_basic(solver, gamma, it, offer);
    } else {
      run_improved(solver, gamma, ub, options.use_pseudo_lb, it, offer);
    }
    result.s_star = it.s_star;
    result.witness = to_input_ids(it.witness);
    result.optimal = true;
  } catch (const SearchTimeout&) {
    result.optimal = false;
    result.witness = best_known;
    result.s_star = static_cast<std::int64_t>(best_known.size());
  }
  result.trace = std::move(it.trace);
  result.plex_stats = solver.stats();
  result.total_ms = ms_since(t0);
  return result;
}

std::string to_json(const SolveResult& r, const Graph& g, int indent) {
  using json = nlohmann::ordered_json;
  json trace = json::array();
  for (const auto& e : r.trace) {
    json row = {{"i", e.i}, {"k", e.k}, {"s", e.s}};
    row["pseudo_lb"] = e.pseudo_lb ? json(*e.pseudo_lb) : json(nullptr);
    row["pseudo_size"] = e.pseudo_size ? json(*e.pseudo_size) : json(nullptr);
    row["ms"] = e.ms;
    trace.push_back(std::move(row));
  }
  json witness = json::array();
  for (VertexId v : r.witness) witness.push_back(g.label(v));
  json out = {
      {"gamma", r.gamma.to_double()},
      {"s_star", r.s_star},
      {"witness", std::move(witness)},
      {"optimal", r.optimal},
      {"trace", std::move(trace)},
      {"lb", r.bounds.lb},
      {"ub", r.bounds.ub},
      {"red_v_pct", r.reduction.red_v_pct},
      {"red_e_pct", r.reduction.red_e_pct},
      {"total_ms", r.total_ms},
  };
  return out.dump(indent);
}

}  // namespace maxqc

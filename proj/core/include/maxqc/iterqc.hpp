#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxqc/bounds.hpp"
#include "maxqc/gamma.hpp"
#include "maxqc/graph.hpp"
#include "maxqc/kplex.hpp"

namespace maxqc {

/// floor((1 - gamma)(x - 1)) + 1: the k for which every k-plex of x vertices
/// is a gamma-quasi-clique. Throws std::invalid_argument if x < 1.
int get_k(std::int64_t x, const Gamma& gamma);

struct IterTraceEntry {
  int i = 0;
  int k = 0;
  std::int64_t s = 0;
  // Only set by the improved search.
  std::optional<std::int64_t> lb_plex;
  std::optional<std::int64_t> pseudo_lb;
  std::optional<std::int64_t> pseudo_size;
  double ms = 0.0;
};

/// Output of one iterative search (basic or improved) on a single graph.
struct IterationResult {
  std::int64_t s_star = 0;
  VertexSet witness;
  std::vector<IterTraceEntry> trace;
};

enum class SearchMode { kBasic, kImproved };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view name);

struct IterationOptions {
  std::size_t heuristic_starts = 100;
  /// Passed through to the k-plex search; sound for gamma >= 0.5.
  bool qc_context = true;
  Deadline deadline;
};

/// s_0 = n, k_i = get_k(s_{i-1}), s_i = maximum k_i-plex size, until
/// k_i == get_k(s_i).
IterationResult basic_iterate(const Graph& g, const Gamma& gamma, const IterationOptions& options = {});

/// Iterative search seeded with an upper bound ub >= s*, using the
/// pseudo-lower-bound k-plex search at every step.
IterationResult improved_iter_search(const Graph& g, const Gamma& gamma, std::int64_t ub,
                                     const IterationOptions& options = {}, bool use_pseudo_lb = true);

struct SolveOptions {
  SearchMode mode = SearchMode::kImproved;
  bool use_preprocessing = true;
  bool use_pseudo_lb = true;
  /// Seconds; unset means no limit.
  std::optional<double> time_limit;
  std::size_t heuristic_starts = 100;
  bool qc_context = true;
};

struct SolveResult {
  Gamma gamma = Gamma::from_fraction(1, 1);
  std::int64_t s_star = 0;
  VertexSet witness;  // ids of the graph passed to solve()
  bool optimal = false;
  std::vector<IterTraceEntry> trace;

  bool preprocessed = false;
  bool short_circuit = false;  // lb == ub, no k-plex search ran
  BoundsResult bounds;
  ReductionStats reduction;
  VertexId reduced_n = 0;
  std::uint64_t reduced_m = 0;

  SolveOptions options;
  PlexStats plex_stats;
  double total_ms = 0.0;
};

/// Two-stage driver: optional peeling bounds and degree reduction, then the
/// basic or improved iterative search. Throws std::invalid_argument for gamma
/// outside [0.5, 1]. On timeout returns the best quasi-clique known so far
/// with optimal == false.
SolveResult solve(const Graph& g, const Gamma& gamma, const SolveOptions& options = {});

/// {gamma, s_star, witness, optimal, trace, lb, ub, red_v_pct, red_e_pct, total_ms};
/// witness ids are the graph's labels.
std::string to_json(const SolveResult& result, const Graph& g, int indent = -1);

}  // namespace maxqc

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "maxqc/graph.hpp"

namespace maxqc {

/// Cooperative wall-clock limit checked between search nodes.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline never() { return Deadline(); }
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool limited() const { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout() : std::runtime_error("search time limit exceeded") {}
};

struct PlexOptions {
  /// Number of reverse-degeneracy-order starts tried by the heuristic.
  std::size_t heuristic_starts = 100;
  /// Restrict the search to k-plexes whose members all lie within distance
  /// two of their first vertex (in peeling order) inside the plex. Every
  /// gamma-quasi-clique with gamma >= 0.5 and every k-plex with at least
  /// 2k - 1 vertices has this shape, so a caller looking for quasi-cliques
  /// loses nothing. The result is then a k-plex at least as large as every
  /// plex of that shape; a larger incumbent is kept. Off by default: the
  /// plain search is exact over all k-plexes.
  bool qc_context = false;
  Deadline deadline;
};

struct PlexStats {
  std::uint64_t heuristic_calls = 0;
  std::uint64_t brb_calls = 0;
  std::uint64_t brb_nodes = 0;
};

/// Maximum k-plex machinery bound to one graph. Precomputes the peeling
/// order once so that repeated calls with different k share it.
///
/// Not thread-safe; use one solver per thread. The graph must outlive it.
class PlexSolver {
 public:
  explicit PlexSolver(const Graph& g, PlexOptions options = {});
  PlexSolver(Graph&&, PlexOptions = {}) = delete;

  const Graph& graph() const { return *g_; }
  const PlexOptions& options() const { return options_; }
  PlexOptions& options() { return options_; }
  const PlexStats& stats() const { return stats_; }

  /// Greedy lower bound: a valid k-plex (a single vertex at worst), or the
  /// empty set for an empty graph.
  VertexSet heuristic(int k);

  /// A maximum k-plex if one with at least `floor_bound` vertices exists,
  /// otherwise the empty set. `seed`, if given, must be a k-plex and is used
  /// as the initial incumbent.
  VertexSet branch_and_bound(int k, std::int64_t floor_bound, const VertexSet& seed = {});

  /// True if every member of s is adjacent to, or shares a neighbor inside s
  /// with, the member that comes first in peeling order.
  bool within_two_hops_of_first(const VertexSet& s) const;

  /// Largest vertex count the dense fallback search accepts (used only for
  /// exact searches below 2k - 1 vertices without qc_context).
  static constexpr VertexId kMaxDenseFallback = 1u << 14;

 private:
  const Graph* g_;
  PlexOptions options_;
  std::vector<VertexId> order_;     // peeling order
  std::vector<VertexId> position_;  // inverse of order_
  VertexId degeneracy_ = 0;
  PlexStats stats_;
};

VertexSet plex_heu(const Graph& g, int k, const PlexOptions& options = {});
VertexSet plex_brb(const Graph& g, int k, std::int64_t floor_bound, const PlexOptions& options = {});

/// Result of one pseudo-lower-bound k-plex search.
struct PlexOutcome {
  std::int64_t lb_plex = 0;
  std::int64_t pseudo_lb = 0;
  std::int64_t pseudo_size = 0;  // 0 iff no k-plex of size >= pseudo_lb was found
  VertexSet witness;
  bool heuristic_matched_bound = false;  // branch-and-bound skipped
};

/// floor((lb_plex + ub_plex) / 2)
std::int64_t pseudo_lower_bound(std::int64_t lb_plex, std::int64_t ub_plex);

/// Heuristic first; if it already reaches ub_plex the branch-and-bound is
/// skipped. Otherwise branch-and-bound with floor pseudo_lb (or with floor
/// lb_plex when use_pseudo_lb is false). A plex larger than ub_plex is cut
/// down to ub_plex vertices, which keeps it a k-plex.
PlexOutcome plex_search(PlexSolver& solver, int k, std::int64_t ub_plex, bool use_pseudo_lb = true);
PlexOutcome plex_search(const Graph& g, int k, std::int64_t ub_plex, const PlexOptions& options = {});

/// Drops minimum-internal-degree members until |s| == size.
VertexSet shrink_plex(const Graph& g, VertexSet s, std::size_t size);

}  // namespace maxqc

#pragma once

#include <cstdint>

#include "maxqc/gamma.hpp"
#include "maxqc/graph.hpp"

namespace maxqc {

/// Bounds on the size of a maximum gamma-quasi-clique, obtained by peeling.
struct BoundsResult {
  std::int64_t lb = 0;
  VertexSet lb_witness;  // empty iff lb == 0
  std::int64_t ub = 0;
  VertexId max_core = 0;
  VertexId peel_steps = 0;
};

/// Min-degree peeling state that also answers "is the residual graph a
/// gamma-quasi-clique?" in O(1).
///
/// The residual graph is a quasi-clique iff its minimum degree, which is the
/// degree of the vertex about to be peeled, meets ceil(gamma (r - 1)).
class QcPeelingState {
 public:
  QcPeelingState(const Graph& g, const Gamma& gamma) : peeler_(g), gamma_(gamma) {}

  VertexId remaining() const { return peeler_.remaining(); }
  bool done() const { return peeler_.done(); }
  VertexId min_degree() const { return peeler_.peek_degree(); }
  bool removed(VertexId v) const { return peeler_.removed(v); }

  bool residual_is_quasi_clique() const;
  VertexId remove_min() { return peeler_.pop(); }

 private:
  MinDegreePeeler peeler_;
  Gamma gamma_;
};

bool check_qc_incremental(const QcPeelingState& state);

/// Peels g to exhaustion. lb is the size of the first residual graph that is
/// a gamma-quasi-clique (with that residual as witness); ub is the running
/// max of min(1 + ceil(max_core / gamma), |residual|).
BoundsResult get_bounds(const Graph& g, const Gamma& gamma);

struct ReductionStats {
  VertexId removed_vertices = 0;
  std::uint64_t removed_edges = 0;
  double red_v_pct = 0.0;
  double red_e_pct = 0.0;
  std::int64_t degree_threshold = 0;
};

struct ReducedGraph {
  Graph graph;
  /// to_parent[i] is the id in the input graph of reduced vertex i.
  std::vector<VertexId> to_parent;
  ReductionStats stats;
};

/// Cascading removal of vertices whose degree is below floor((lb - 1) gamma).
/// Every gamma-quasi-clique with at least lb vertices survives.
ReducedGraph reduce_graph(const Graph& g, const Gamma& gamma, std::int64_t lb);

}  // namespace maxqc

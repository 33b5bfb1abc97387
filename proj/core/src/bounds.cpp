#include "maxqc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxqc {

bool QcPeelingState::residual_is_quasi_clique() const {
  if (done()) return false;
  return static_cast<std::int64_t>(min_degree()) >= gamma_.min_degree(remaining());
}

bool check_qc_incremental(const QcPeelingState& state) { return state.residual_is_quasi_clique(); }

BoundsResult get_bounds(const Graph& g, const Gamma& gamma) {
  BoundsResult out;
  if (g.empty()) return out;

  QcPeelingState state(g, gamma);
  std::int64_t max_core = 0;
  while (!state.done()) {
    const std::int64_t residual = state.remaining();
    max_core = std::max<std::int64_t>(max_core, state.min_degree());
    out.ub = std::max(out.ub, std::min<std::int64_t>(1 + gamma.ceil_divided(max_core), residual));
    if (out.lb == 0 && state.residual_is_quasi_clique()) {
      out.lb = residual;
      out.lb_witness.reserve(static_cast<std::size_t>(residual));
      for (VertexId v = 0; v < g.n(); ++v) {
        if (!state.removed(v)) out.lb_witness.push_back(v);
      }
    }
    state.remove_min();
    ++out.peel_steps;
  }
  out.max_core = static_cast<VertexId>(max_core);
  return out;
}

ReducedGraph reduce_graph(const Graph& g, const Gamma& gamma, std::int64_t lb) {
  if (lb < 1) throw std::invalid_argument("reduce_graph: lb must be >= 1");
  const std::int64_t threshold = gamma.floor_times(lb - 1);

  std::vector<VertexId> degree(g.n());
  std::vector<char> removed(g.n(), 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.n(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < threshold) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId w : g.neighbors(queue[head])) {
      if (removed[w]) continue;
      if (--degree[w] < threshold) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }

  ReducedGraph out;
  out.to_parent.reserve(g.n() - queue.size());
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!removed[v]) out.to_parent.push_back(v);
  }
  out.graph = g.induced(out.to_parent);

  auto& s = out.stats;
  s.degree_threshold = threshold;
  s.removed_vertices = g.n() - out.graph.n();
  s.removed_edges = g.m() - out.graph.m();
  s.red_v_pct = g.n() == 0 ? 0.0 : 100.0 * s.removed_vertices / g.n();
  s.red_e_pct = g.m() == 0 ? 0.0 : 100.0 * static_cast<double>(s.removed_edges) / static_cast<double>(g.m());
  return out;
}

}  // namespace maxqc

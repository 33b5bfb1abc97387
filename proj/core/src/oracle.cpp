#include "maxqc/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxqc {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g, const OracleLimit& limit) {
  if (limit.max_n > OracleLimit::kHardCap) {
    throw std::invalid_argument("oracle: max_n may not exceed " + std::to_string(OracleLimit::kHardCap));
  }
  if (g.n() > limit.max_n) {
    throw std::invalid_argument("oracle: graph has " + std::to_string(g.n()) + " vertices, limit is " +
                                std::to_string(limit.max_n));
  }
  std::vector<Mask> adj(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    for (VertexId u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  }
  return adj;
}

VertexSet members_of(Mask s) {
  VertexSet out;
  while (s) {
    out.push_back(static_cast<VertexId>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

// Smallest internal degree over the members of s (s nonempty).
int min_internal_degree(const std::vector<Mask>& adj, Mask s) {
  int best = 32;
  for (Mask rest = s; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    best = std::min(best, std::popcount(adj[v] & s));
  }
  return best;
}

// Walks sizes from n down to 1; within a size, subsets come in lexicographic
// order of their sorted member lists, so the first hit is the answer.
template <class Feasible>
OracleResult largest_feasible(VertexId n, Feasible feasible) {
  std::vector<VertexId> pick;
  for (VertexId size = n; size >= 1; --size) {
    pick.resize(size);
    for (VertexId i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Mask s = 0;
      for (VertexId v : pick) s |= Mask{1} << v;
      if (feasible(s, static_cast<int>(size))) return {static_cast<std::int64_t>(size), members_of(s)};
      // next combination
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && pick[i] == n - size + static_cast<VertexId>(i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (VertexId j = static_cast<VertexId>(i) + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

struct CliqueSearch {
  const std::vector<Mask>& adj;
  Mask best = 0;
  int best_size = 0;

  void expand(Mask r, int r_size, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      // Ties resolved toward the lexicographically smaller member list.
      if (r_size > best_size || (r_size == best_size && members_of(r) < members_of(best))) {
        best = r;
        best_size = r_size;
      }
      return;
    }
    if (r_size + std::popcount(p) < best_size) return;
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int pivot_hits = -1;
    for (Mask rest = px; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int hits = std::popcount(p & adj[u]);
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
    for (Mask rest = p & ~adj[pivot]; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask bit = Mask{1} << v;
      expand(r | bit, r_size + 1, p & adj[v], x & adj[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace

OracleResult brute_max_qc(const Graph& g, const Gamma& gamma, OracleLimit limit) {
  const auto adj = adjacency_masks(g, limit);
  return largest_feasible(g.n(), [&](Mask s, int size) {
    return min_internal_degree(adj, s) >= gamma.min_degree(size);
  });
}

OracleResult brute_max_kplex(const Graph& g, int k, OracleLimit limit) {
  if (k < 1) throw std::invalid_argument("oracle: k must be >= 1");
  const auto adj = adjacency_masks(g, limit);
  return largest_feasible(g.n(), [&](Mask s, int size) { return min_internal_degree(adj, s) >= size - k; });
}

OracleResult bron_kerbosch_max_clique(const Graph& g, OracleLimit limit) {
  const auto adj = adjacency_masks(g, limit);
  if (g.empty()) return {};
  CliqueSearch search{adj};
  const Mask all = g.n() == 32 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  search.expand(0, 0, all, 0);
  return {search.best_size, members_of(search.best)};
}

}  // namespace maxqc

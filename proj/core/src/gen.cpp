#include "maxqc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace maxqc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Largest multiple of bound representable; draws at or above it are retried.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph gen_sf(VertexId n, VertexId w, std::uint64_t seed) {
  if (w < 1 || w >= n) throw std::invalid_argument("gen_sf: need 1 <= w < n");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(w - 1) + static_cast<std::size_t>(n - w) * w);
  // Every edge contributes both endpoints, so a uniform pick is degree-proportional.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  auto add = [&](VertexId u, VertexId v) {
    edges.push_back({u, v});
    endpoints.push_back(u);
    endpoints.push_back(v);
  };

  for (VertexId leaf = 1; leaf < w; ++leaf) add(0, leaf);

  std::vector<char> taken(n, 0);
  std::vector<VertexId> targets;
  for (VertexId v = w; v < n; ++v) {
    targets.clear();
    if (v == w) {
      for (VertexId u = 0; u < w; ++u) targets.push_back(u);
    } else {
      while (targets.size() < w) {
        const VertexId u = endpoints[rng.below(endpoints.size())];
        if (taken[u]) continue;
        taken[u] = 1;
        targets.push_back(u);
      }
      for (VertexId u : targets) taken[u] = 0;
    }
    for (VertexId u : targets) add(v, u);
  }
  return Graph::from_edges(n, edges);
}

Graph gen_sw(VertexId n, VertexId d, double p, std::uint64_t seed) {
  if (d < 1 || d >= n) throw std::invalid_argument("gen_sw: need 0 < d < n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_sw: need 0 <= p <= 1");
  Rng rng(seed);
  const VertexId half = d / 2;
  std::vector<std::vector<VertexId>> adj(n);
  auto has = [&](VertexId u, VertexId v) { return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end(); };
  auto drop = [&](VertexId u, VertexId v) {
    adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
    adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
  };
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId j = 1; j <= half; ++j) {
      const VertexId v = (u + j) % n;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  for (VertexId j = 1; j <= half; ++j) {
    for (VertexId u = 0; u < n; ++u) {
      if (!rng.chance(p)) continue;
      if (adj[u].size() + 1 >= n) continue;  // u already sees everyone
      const VertexId v = (u + j) % n;
      VertexId t;
      do {
        t = static_cast<VertexId>(rng.below(n));
      } while (t == u || has(u, t));
      drop(u, v);
      adj[u].push_back(t);
      adj[t].push_back(u);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * half);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_er(VertexId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_er: need 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate(const GenSpec& spec) {
  return spec.model == GenModel::kScaleFree ? gen_sf(spec.n, spec.w, spec.seed)
                                            : gen_sw(spec.n, spec.d, spec.p, spec.seed);
}

std::string manifest(const GenSpec& spec) {
  std::ostringstream out;
  if (spec.model == GenModel::kScaleFree) {
    out << "gen model=sf n=" << spec.n << " w=" << spec.w << " seed=" << spec.seed;
  } else {
    out << "gen model=sw n=" << spec.n << " d=" << spec.d << " p=" << spec.p << " seed=" << spec.seed;
  }
  return out.str();
}

Graph sample_subgraph(const Graph& g, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio <= 1.0)) throw std::invalid_argument("sample_subgraph: ratio must lie in (0, 1]");
  const auto want = static_cast<VertexId>(
      std::min<double>(g.n(), std::ceil(ratio * static_cast<double>(g.n()) - 1e-9)));
  std::vector<VertexId> ids(g.n());
  std::iota(ids.begin(), ids.end(), 0);
  Rng rng(seed);
  for (VertexId i = 0; i < want; ++i) {
    std::swap(ids[i], ids[i + rng.below(g.n() - i)]);
  }
  ids.resize(want);
  std::sort(ids.begin(), ids.end());
  return g.induced(ids);
}

}  // namespace maxqc

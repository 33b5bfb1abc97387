#include "maxqc/graph.hpp"

#include <algorithm>
#include <functional>

namespace maxqc {

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges, std::vector<Label> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("Graph: label count does not match vertex count");
  }
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    if (e.u == e.v) continue;
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<VertexId> raw(g.offsets_[n]);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    raw[fill[e.u]++] = e.v;
    raw[fill[e.v]++] = e.u;
  }

  // Sort and deduplicate each list, compacting in place.
  g.adjacency_.reserve(raw.size());
  std::vector<std::uint64_t> compact(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    compact[v + 1] = g.adjacency_.size();
  }
  g.offsets_ = std::move(compact);
  g.adjacency_.shrink_to_fit();
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexId Graph::max_degree() const {
  VertexId best = 0;
  for (VertexId v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

double Graph::density() const {
  const double nn = n();
  if (nn < 2) return 0.0;
  return 2.0 * static_cast<double>(m()) / (nn * (nn - 1.0));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (VertexId u = 0; u < n(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> local(n(), kAbsent);
  for (VertexId i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n()) throw std::invalid_argument("Graph::induced: vertex out of range");
    if (local[keep[i]] != kAbsent) throw std::invalid_argument("Graph::induced: duplicate vertex");
    local[keep[i]] = i;
  }
  std::vector<Edge> sub;
  std::vector<Label> labels(keep.size());
  for (VertexId i = 0; i < keep.size(); ++i) {
    labels[i] = label(keep[i]);
    for (VertexId w : neighbors(keep[i])) {
      if (local[w] != kAbsent && i < local[w]) sub.push_back({i, local[w]});
    }
  }
  return from_edges(static_cast<VertexId>(keep.size()), sub, std::move(labels));
}

MinDegreePeeler::MinDegreePeeler(const Graph& g)
    : g_(&g), degree_(g.n()), removed_(g.n(), 0), remaining_(g.n()) {
  if (g.n() == 0) return;
  buckets_.resize(static_cast<std::size_t>(g.max_degree()) + 1);
  for (VertexId v = 0; v < g.n(); ++v) {
    degree_[v] = g.degree(v);
    buckets_[degree_[v]].push_back(v);
  }
  for (auto& b : buckets_) std::make_heap(b.begin(), b.end(), std::greater<>{});
  settle();
}

void MinDegreePeeler::settle() {
  for (;;) {
    auto& b = buckets_[cursor_];
    if (b.empty()) {
      ++cursor_;
      continue;
    }
    const VertexId u = b.front();
    if (!removed_[u] && degree_[u] == cursor_) {
      next_ = u;
      return;
    }
    std::pop_heap(b.begin(), b.end(), std::greater<>{});
    b.pop_back();
  }
}

VertexId MinDegreePeeler::pop() {
  const VertexId u = next_;
  auto& top = buckets_[cursor_];
  std::pop_heap(top.begin(), top.end(), std::greater<>{});
  top.pop_back();
  removed_[u] = 1;
  --remaining_;
  for (VertexId w : g_->neighbors(u)) {
    if (removed_[w]) continue;
    auto& b = buckets_[--degree_[w]];
    b.push_back(w);
    std::push_heap(b.begin(), b.end(), std::greater<>{});
  }
  // The minimum can drop by at most one per removal.
  if (cursor_ > 0) --cursor_;
  if (remaining_ > 0) settle();
  return u;
}

CoreInfo core_decompose(const Graph& g) {
  CoreInfo info;
  info.core.assign(g.n(), 0);
  info.peel_order.reserve(g.n());
  MinDegreePeeler peeler(g);
  VertexId level = 0;
  while (!peeler.done()) {
    level = std::max(level, peeler.peek_degree());
    const VertexId u = peeler.pop();
    info.core[u] = level;
    info.peel_order.push_back(u);
  }
  info.max_core = level;
  return info;
}

void validate_vertex_set(const Graph& g, std::span<const VertexId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.n()) throw std::invalid_argument("vertex set: id out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("vertex set: ids must be strictly ascending");
  }
}

VertexId induced_degree(const Graph& g, std::span<const VertexId> s, VertexId v) {
  if (!std::binary_search(s.begin(), s.end(), v)) {
    throw std::invalid_argument("induced_degree: vertex is not a member of the set");
  }
  // Merge-intersect two sorted lists.
  auto nb = g.neighbors(v);
  VertexId count = 0;
  auto a = nb.begin();
  auto b = s.begin();
  while (a != nb.end() && b != s.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

namespace {

// Smallest induced degree over the members of s.
VertexId min_induced_degree(const Graph& g, std::span<const VertexId> s) {
  validate_vertex_set(g, s);
  VertexId lowest = static_cast<VertexId>(s.size());
  for (VertexId v : s) lowest = std::min(lowest, induced_degree(g, s, v));
  return lowest;
}

}  // namespace

bool is_quasi_clique(const Graph& g, std::span<const VertexId> s, const Gamma& gamma) {
  if (s.empty()) throw std::invalid_argument("is_quasi_clique: empty vertex set");
  const auto need = gamma.min_degree(static_cast<std::int64_t>(s.size()));
  return static_cast<std::int64_t>(min_induced_degree(g, s)) >= need;
}

bool is_kplex(const Graph& g, std::span<const VertexId> s, int k) {
  if (s.empty()) throw std::invalid_argument("is_kplex: empty vertex set");
  if (k < 1) throw std::invalid_argument("is_kplex: k must be >= 1");
  return static_cast<std::int64_t>(min_induced_degree(g, s)) >= static_cast<std::int64_t>(s.size()) - k;
}

}  // namespace maxqc

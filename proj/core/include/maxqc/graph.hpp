#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxqc/gamma.hpp"

namespace maxqc {

using VertexId = std::uint32_t;
using Label = std::uint64_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u;
  VertexId v;
};

/// Immutable undirected simple graph in CSR form.
///
/// Neighbor lists are strictly ascending and symmetric; self-loops and
/// parallel edges never survive construction. Each vertex optionally carries
/// the id it had in the input file.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Self-loops and duplicate edges are
  /// dropped; endpoints must be < n. If `labels` is empty, label(v) == v.
  static Graph from_edges(VertexId n, std::span<const Edge> edges, std::vector<Label> labels = {});

  VertexId n() const { return static_cast<VertexId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::uint64_t m() const { return adjacency_.size() / 2; }
  bool empty() const { return n() == 0; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  VertexId degree(VertexId v) const { return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(VertexId u, VertexId v) const;

  Label label(VertexId v) const { return labels_.empty() ? v : labels_[v]; }
  bool has_labels() const { return !labels_.empty(); }

  VertexId max_degree() const;
  /// 2m / (n (n - 1)); reporting only.
  double density() const;

  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (any order, no duplicates). Vertex i of the
  /// result is keep[i]; labels are carried over from this graph.
  Graph induced(std::span<const VertexId> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<Label> labels_;
};

/// Per-vertex core numbers plus the minimum-degree peeling order that
/// produced them.
struct CoreInfo {
  std::vector<VertexId> core;
  std::vector<VertexId> peel_order;
  VertexId max_core = 0;

  VertexId degeneracy() const { return max_core; }
};

/// Repeatedly removes a minimum-degree vertex from a private working copy of
/// the graph. Ties go to the smallest id. Buckets are indexed by current
/// degree and each bucket is a min-heap with lazy deletion.
class MinDegreePeeler {
 public:
  explicit MinDegreePeeler(const Graph& g);

  VertexId remaining() const { return remaining_; }
  bool done() const { return remaining_ == 0; }
  /// Vertex that the next pop() removes, and its current degree.
  VertexId peek() const { return next_; }
  VertexId peek_degree() const { return degree_[next_]; }
  VertexId current_degree(VertexId v) const { return degree_[v]; }
  bool removed(VertexId v) const { return removed_[v] != 0; }

  VertexId pop();

 private:
  void settle();

  const Graph* g_;
  std::vector<VertexId> degree_;
  std::vector<char> removed_;
  std::vector<std::vector<VertexId>> buckets_;
  VertexId cursor_ = 0;
  VertexId remaining_ = 0;
  VertexId next_ = 0;
};

/// Minimum-degree peeling; among vertices of equal current degree the
/// smallest id is removed first.
CoreInfo core_decompose(const Graph& g);

/// |N(v) ∩ s|. Throws std::invalid_argument if v is not in s.
VertexId induced_degree(const Graph& g, std::span<const VertexId> s, VertexId v);

/// Every member has at least ceil(gamma (|s| - 1)) neighbors inside s.
bool is_quasi_clique(const Graph& g, std::span<const VertexId> s, const Gamma& gamma);

/// Every member has at least |s| - k neighbors inside s.
bool is_kplex(const Graph& g, std::span<const VertexId> s, int k);

/// Throws std::invalid_argument unless `s` is sorted, duplicate-free and in range.
void validate_vertex_set(const Graph& g, std::span<const VertexId> s);

// ---------------------------------------------------------------------------
// File IO

enum class GraphFormat { kAuto, kEdgeList, kMetis };

GraphFormat parse_graph_format(std::string_view name);

class GraphIoError : public std::runtime_error {
 public:
  GraphIoError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph load_graph(const std::filesystem::path& path, GraphFormat format = GraphFormat::kAuto);
Graph read_graph(std::istream& in, GraphFormat format = GraphFormat::kAuto);

/// Writes "u v" lines using labels, preceded by optional '#' comment lines.
void write_edgelist(std::ostream& out, const Graph& g, std::span<const std::string> header_comments = {});
void save_edgelist(const std::filesystem::path& path, const Graph& g,
                   std::span<const std::string> header_comments = {});

}  // namespace maxqc

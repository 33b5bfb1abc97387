#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "maxqc/graph.hpp"

namespace maxqc {

/// Seeded 64-bit generator used by every random routine in the library.
///
/// std::uniform_int_distribution and friends are implementation-defined, so
/// integers and doubles are drawn by hand to keep output identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0; unbiased by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class GenModel { kScaleFree, kSmallWorld };

struct GenSpec {
  GenModel model = GenModel::kScaleFree;
  VertexId n = 0;
  VertexId w = 0;  // scale-free attachment count
  VertexId d = 0;  // small-world ring degree
  double p = 0.0;  // small-world rewiring probability
  std::uint64_t seed = 0;
};

/// Barabasi-Albert growth from a star on w vertices; every new vertex picks w
/// distinct existing targets with probability proportional to degree.
/// m == (w - 1) + (n - w) w. Throws unless 1 <= w < n.
Graph gen_sf(VertexId n, VertexId w, std::uint64_t seed);

/// Watts-Strogatz: ring lattice with floor(d / 2) neighbors on each side, then
/// each lattice edge (u, u + j) is rewired with probability p to a uniformly
/// random vertex not adjacent to u. m == n floor(d / 2).
/// Throws unless 0 < d < n and 0 <= p <= 1.
Graph gen_sw(VertexId n, VertexId d, double p, std::uint64_t seed);

/// G(n, p) random graph.
Graph gen_er(VertexId n, double p, std::uint64_t seed);

Graph generate(const GenSpec& spec);

/// "# gen model=sf n=.. w=.. seed=.." style manifest line (without the '#').
std::string manifest(const GenSpec& spec);

/// Subgraph induced by ceil(ratio n) vertices sampled uniformly without
/// replacement. ratio must lie in (0, 1]. Labels are carried over.
Graph sample_subgraph(const Graph& g, double ratio, std::uint64_t seed);

}  // namespace maxqc

#pragma once

#include <cstdint>

#include "maxqc/gamma.hpp"
#include "maxqc/graph.hpp"

namespace maxqc {

/// Exhaustive ground truth for small graphs.
struct OracleLimit {
  static constexpr VertexId kHardCap = 26;
  VertexId max_n = 20;
};

struct OracleResult {
  std::int64_t size = 0;
  VertexSet members;  // lexicographically smallest among maximum sets
};

/// Maximum gamma-quasi-clique by enumerating subsets from largest to
/// smallest. Throws std::invalid_argument if n > limit.max_n or max_n > 26.
OracleResult brute_max_qc(const Graph& g, const Gamma& gamma, OracleLimit limit = {});

/// Maximum k-plex, same enumeration. Throws also for k < 1.
OracleResult brute_max_kplex(const Graph& g, int k, OracleLimit limit = {});

/// Maximum clique by Bron-Kerbosch with Tomita pivoting on bitsets; an
/// independent cross-check for brute_max_kplex(g, 1).
OracleResult bron_kerbosch_max_clique(const Graph& g, OracleLimit limit = {});

}  // namespace maxqc

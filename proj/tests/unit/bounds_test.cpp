#include <gtest/gtest.h>

#include "corpus.hpp"
#include "maxqc/bounds.hpp"
#include "maxqc/iterqc.hpp"
#include "maxqc/oracle.hpp"

using namespace maxqc;
using namespace maxqc::testing;

namespace {

// K5 without {0,1} and {2,3}, plus a pendant path on each of its vertices.
Graph dense_five_with_tails() {
  std::vector<Edge> e;
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) {
      if ((u == 0 && v == 1) || (u == 2 && v == 3)) continue;
      e.push_back({u, v});
    }
  }
  VertexId next = 5;
  for (VertexId u = 0; u < 5; ++u) {
    e.push_back({u, next});
    e.push_back({next, next + 1});
    next += 2;
  }
  return Graph::from_edges(next, e);
}

}  // namespace

TEST(GetBounds, Triangle) {
  const BoundsResult b = get_bounds(triangle(), Gamma::parse("0.75"));
  EXPECT_EQ(b.lb, 3);
  EXPECT_EQ(b.ub, 3);
  EXPECT_EQ(b.lb_witness, (VertexSet{0, 1, 2}));
  EXPECT_EQ(b.max_core, 2u);
}

TEST(GetBounds, SingleVertexAndEmpty) {
  const BoundsResult one = get_bounds(make_graph(1, {}), Gamma::parse("0.9"));
  EXPECT_EQ(one.lb, 1);
  EXPECT_EQ(one.ub, 1);
  const BoundsResult none = get_bounds(Graph(), Gamma::parse("0.9"));
  EXPECT_EQ(none.lb, 0);
  EXPECT_EQ(none.ub, 0);
  EXPECT_TRUE(none.lb_witness.empty());
}

// max_core 3 at gamma 0.75 caps ub at 1 + ceil(3 / 0.75) = 5.
TEST(GetBounds, CoreThreeGivesFive) {
  const Graph g = dense_five_with_tails();
  const Gamma gamma = Gamma::parse("0.75");
  const BoundsResult b = get_bounds(g, gamma);
  EXPECT_EQ(b.max_core, 3u);
  EXPECT_EQ(b.ub, 5);
  EXPECT_EQ(b.lb, 5);
  EXPECT_EQ(brute_max_qc(g, gamma).size, 5);
}

TEST(GetBounds, SandwichAndCoreCap) {
  const auto corpus = er_corpus(300);
  for (const auto& gs : corpus_gammas()) {
    const Gamma gamma = Gamma::parse(gs);
    for (const auto& cg : corpus) {
      const BoundsResult b = get_bounds(cg.graph, gamma);
      const std::int64_t s = brute_max_qc(cg.graph, gamma).size;
      EXPECT_LE(b.lb, s) << cg.name << " " << gs;
      EXPECT_GE(b.ub, s) << cg.name << " " << gs;
      EXPECT_LE(b.ub, 1 + gamma.ceil_divided(b.max_core));
      EXPECT_EQ(static_cast<std::int64_t>(b.lb_witness.size()), b.lb);
      if (b.lb > 0) EXPECT_TRUE(is_quasi_clique(cg.graph, b.lb_witness, gamma));
    }
  }
}

// A smaller gamma never lowers lb.
TEST(GetBounds, LowerBoundMonotoneInGamma) {
  for (const auto& cg : er_corpus(300)) {
    std::int64_t prev = 0;
    for (auto it = corpus_gammas().rbegin(); it != corpus_gammas().rend(); ++it) {
      const std::int64_t lb = get_bounds(cg.graph, Gamma::parse(*it)).lb;
      EXPECT_GE(lb, prev) << cg.name << " " << *it;
      prev = lb;
    }
  }
}

TEST(CheckQcIncremental, Examples) {
  EXPECT_TRUE(check_qc_incremental(QcPeelingState(triangle(), Gamma::parse("0.75"))));
  EXPECT_FALSE(check_qc_incremental(QcPeelingState(path3(), Gamma::parse("0.75"))));
  EXPECT_TRUE(check_qc_incremental(QcPeelingState(k4_minus_edge(), Gamma::parse("0.5"))));
  EXPECT_FALSE(check_qc_incremental(QcPeelingState(k4_minus_edge(), Gamma::parse("0.75"))));
}

// The O(1) answer matches a direct check at every peeling step.
TEST(CheckQcIncremental, MatchesDirectCheck) {
  for (const auto& gs : corpus_gammas()) {
    const Gamma gamma = Gamma::parse(gs);
    for (const auto& cg : er_corpus(120)) {
      QcPeelingState state(cg.graph, gamma);
      while (!state.done()) {
        VertexSet residual;
        for (VertexId v = 0; v < cg.graph.n(); ++v) {
          if (!state.removed(v)) residual.push_back(v);
        }
        ASSERT_EQ(check_qc_incremental(state), is_quasi_clique(cg.graph, residual, gamma)) << cg.name;
        state.remove_min();
      }
    }
  }
}

TEST(ReduceGraph, StarThresholds) {
  const Gamma gamma = Gamma::parse("0.75");
  const ReducedGraph keep = reduce_graph(star(9), gamma, 3);
  EXPECT_EQ(keep.stats.degree_threshold, 1);
  EXPECT_EQ(keep.graph.n(), 10u);
  EXPECT_EQ(keep.stats.removed_vertices, 0u);

  const ReducedGraph gone = reduce_graph(star(9), gamma, 4);
  EXPECT_EQ(gone.stats.degree_threshold, 2);
  EXPECT_EQ(gone.graph.n(), 0u);
  EXPECT_DOUBLE_EQ(gone.stats.red_v_pct, 100.0);
  EXPECT_DOUBLE_EQ(gone.stats.red_e_pct, 100.0);
}

TEST(ReduceGraph, LbOneRemovesNothing) {
  const ReducedGraph r = reduce_graph(clique_with_paths(4, 3, 3), Gamma::parse("0.9"), 1);
  EXPECT_EQ(r.stats.removed_vertices, 0u);
  EXPECT_EQ(r.graph.n(), 13u);
}

TEST(ReduceGraph, MapsBackToParentIds) {
  const Graph g = clique_with_paths(5, 2, 4);
  const ReducedGraph r = reduce_graph(g, Gamma::parse("0.75"), 5);
  EXPECT_EQ(r.graph.n(), 5u);
  EXPECT_EQ(r.to_parent, (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.stats.removed_edges, g.m() - 10);
}

// Solving the reduced graph, floored at lb, still gives s*.
TEST(ReduceGraph, PreservesOptimum) {
  for (const auto& gs : corpus_gammas()) {
    const Gamma gamma = Gamma::parse(gs);
    for (const auto& cg : er_corpus(300)) {
      const BoundsResult b = get_bounds(cg.graph, gamma);
      if (b.lb == 0) continue;
      const ReducedGraph r = reduce_graph(cg.graph, gamma, b.lb);
      const std::int64_t s = brute_max_qc(cg.graph, gamma).size;
      const std::int64_t on_reduced = r.graph.n() == 0 ? 0 : brute_max_qc(r.graph, gamma).size;
      EXPECT_EQ(std::max(on_reduced, b.lb), s) << cg.name << " " << gs;
      for (VertexId v : b.lb_witness) {
        EXPECT_NE(std::find(r.to_parent.begin(), r.to_parent.end(), v), r.to_parent.end());
      }
    }
  }
}

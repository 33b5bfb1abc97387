#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "maxqc/gen.hpp"
#include "maxqc/graph.hpp"

using namespace maxqc;

namespace {

Graph parse(const std::string& text, GraphFormat format = GraphFormat::kAuto) {
  std::istringstream in(text);
  return read_graph(in, format);
}

}  // namespace

TEST(GraphIo, EdgeListTriangle) {
  const Graph g = parse("0 1\n1 2\n0 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
}

TEST(GraphIo, CompactsIdsAndKeepsLabels) {
  const Graph g = parse("# comment\n5 7\n7 5\n5 5\n");
  EXPECT_EQ(g.n(), 2u);
  EXPECT_EQ(g.m(), 1u);
  EXPECT_EQ(g.label(0), 5u);
  EXPECT_EQ(g.label(1), 7u);
}

TEST(GraphIo, PercentComments) {
  const Graph g = parse("% header\n1 2\n", GraphFormat::kEdgeList);
  EXPECT_EQ(g.m(), 1u);
}

TEST(GraphIo, MetisTriangle) {
  const Graph g = parse("3 3\n2 3\n1 3\n1 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  const Graph forced = parse("3 3\n2 3\n1 3\n1 2\n", GraphFormat::kMetis);
  EXPECT_EQ(forced, g);
}

TEST(GraphIo, MetisWithIsolatedVertex) {
  const Graph g = parse("% c\n3 1\n2\n1\n\n", GraphFormat::kMetis);
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 1u);
  EXPECT_EQ(g.degree(2), 0u);
}

// Two tokens on the first line but the body does not fit a header.
TEST(GraphIo, AutoFallsBackToEdgeList) {
  const Graph g = parse("0 1\n1 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
}

TEST(GraphIo, MalformedLineReportsLineNumber) {
  try {
    parse("0 1\n1 x\n", GraphFormat::kEdgeList);
    FAIL() << "no throw";
  } catch (const GraphIoError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(GraphIo, MetisHeaderMismatch) {
  EXPECT_THROW(parse("3 5\n2 3\n1 3\n1 2\n", GraphFormat::kMetis), GraphIoError);
  EXPECT_THROW(parse("3 3\n2 3\n1 3\n", GraphFormat::kMetis), GraphIoError);
  EXPECT_THROW(parse("2 1\n2\n3\n", GraphFormat::kMetis), GraphIoError);
}

TEST(GraphIo, MissingFile) {
  EXPECT_THROW(load_graph("/nonexistent/graph.el"), GraphIoError);
}

TEST(GraphIo, FormatNames) {
  EXPECT_EQ(parse_graph_format("metis"), GraphFormat::kMetis);
  EXPECT_EQ(parse_graph_format("edgelist"), GraphFormat::kEdgeList);
  EXPECT_EQ(parse_graph_format("auto"), GraphFormat::kAuto);
  EXPECT_THROW(parse_graph_format("gml"), std::invalid_argument);
}

TEST(GraphIo, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "maxqc_io_test";
  std::filesystem::create_directories(dir);
  for (const Graph& g : {gen_sf(300, 4, 3), gen_sw(200, 6, 0.3, 9), maxqc::testing::k4_minus_edge()}) {
    const auto path = dir / "g.el";
    const std::vector<std::string> header{"round trip"};
    save_edgelist(path, g, header);
    const Graph back = load_graph(path);
    EXPECT_EQ(back.n(), g.n());
    EXPECT_EQ(back.m(), g.m());
    EXPECT_EQ(back.edges().size(), g.edges().size());
    std::ostringstream a;
    std::ostringstream b;
    write_edgelist(a, g);
    write_edgelist(b, back);
    EXPECT_EQ(a.str(), b.str());
  }
  std::filesystem::remove_all(dir);
}

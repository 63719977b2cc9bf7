#include "bbcage/bigraph.hpp"
#include "bbcage/error.hpp"

#include "graph_oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

namespace bbcage {
namespace {

using testing::brute_force_girth;
using testing::cycle;

BipartiteGraph heawood() { return incidence_graph(sts(7)); }

BipartiteGraph path5() {
  // A = {0, 1, 2}, B = {3, 4}: 0-3-1-4-2
  const std::vector<Edge> e = {{0, 3}, {1, 3}, {1, 4}, {2, 4}};
  return BipartiteGraph(3, 2, e);
}

TEST(BipartiteGraph, RejectsInvalidEdges) {
  const std::vector<Edge> intra = {{0, 1}};
  EXPECT_THROW(BipartiteGraph(2, 2, intra), ParameterError);
  const std::vector<Edge> multi = {{0, 2}, {2, 0}};
  EXPECT_THROW(BipartiteGraph(2, 2, multi), ParameterError);
  const std::vector<Edge> range = {{0, 4}};
  EXPECT_THROW(BipartiteGraph(2, 2, range), ParameterError);
}

TEST(IncidenceGraph, Examples) {
  const auto h = heawood();
  EXPECT_EQ(h.order(), 14u);
  EXPECT_EQ(h.edge_count(), 21u);
  EXPECT_TRUE(is_biregular(h, 3, 3));

  EXPECT_EQ(incidence_graph(sts(13)).order(), 39u);

  const auto ag = incidence_graph(affine_plane(3));
  EXPECT_EQ(ag.order(), 21u);
  EXPECT_TRUE(is_biregular(ag, 3, 4));
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(cycle(8)), Girth(8));
  EXPECT_EQ(girth(heawood()), Girth(6));
  EXPECT_EQ(girth(path5()), Girth::infinite());
  EXPECT_FALSE(girth(path5()).is_finite());
  EXPECT_EQ(girth(path5()).str(), "INFINITE");
  EXPECT_EQ(girth(BipartiteGraph(1, 1, {})), Girth::infinite());
  EXPECT_LT(Girth(1000), Girth::infinite());
}

TEST(Girth, HeawoodMatchesBruteForce) {
  EXPECT_EQ(brute_force_girth(testing::adjacency(heawood())), 6u);
}

TEST(Girth, ThroughRoot) {
  EXPECT_EQ(girth_through(heawood(), 0), Girth(6));
  EXPECT_EQ(girth_through(cycle(10), 3), Girth(10));
  EXPECT_EQ(girth_through(cycle(10), 3, Girth(10)), Girth::infinite());
}

TEST(Girth, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(20190617);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_bipartite(rng, 24);
    const std::uint32_t oracle = brute_force_girth(testing::adjacency(g));
    const Girth expect = oracle == 0 ? Girth::infinite() : Girth(oracle);
    ASSERT_EQ(girth(g, Exec::serial), expect) << "trial " << trial;
    ASSERT_EQ(girth(g, Exec::parallel), expect) << "trial " << trial;
    if (expect.is_finite()) ASSERT_EQ(expect.value() % 2, 0u);
  }
}

TEST(Girth, SerialAndParallelAgreeOnGeometries) {
  for (const auto& s : {projective_plane(4), symplectic_gq(3), elliptic_quadric_gq(2)}) {
    const auto g = incidence_graph(s);
    EXPECT_EQ(girth(g, Exec::serial), girth(g, Exec::parallel));
  }
}

TEST(DegreeSets, Examples) {
  const auto sts13 = degree_sets(incidence_graph(sts(13)));
  EXPECT_EQ(sts13.a, (std::map<std::uint32_t, std::uint32_t>{{6, 13}}));
  EXPECT_EQ(sts13.b, (std::map<std::uint32_t, std::uint32_t>{{3, 26}}));

  const auto q52 = degree_sets(incidence_graph(elliptic_quadric_gq(2)));
  EXPECT_EQ(q52.a, (std::map<std::uint32_t, std::uint32_t>{{5, 27}}));
  EXPECT_EQ(q52.b, (std::map<std::uint32_t, std::uint32_t>{{3, 45}}));

  const auto empty = degree_sets(BipartiteGraph(1, 1, {}));
  EXPECT_EQ(empty.a, (std::map<std::uint32_t, std::uint32_t>{{0, 1}}));
  EXPECT_EQ(empty.b, (std::map<std::uint32_t, std::uint32_t>{{0, 1}}));
}

TEST(IsBiregular, Examples) {
  EXPECT_TRUE(is_biregular(heawood(), 3, 3));
  EXPECT_FALSE(is_biregular(heawood(), 3, 4));
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  EXPECT_TRUE(is_biregular(BipartiteGraph(1, 3, star), 1, 3));
  EXPECT_FALSE(is_biregular(path5(), 1, 2));
}

TEST(InducedSubgraph, Examples) {
  const auto h = heawood();
  std::vector<Vertex> all(h.order());
  std::iota(all.begin(), all.end(), 0u);
  const auto same = induced_subgraph(h, all);
  EXPECT_EQ(same.graph, h);
  EXPECT_EQ(same.original, all);

  std::vector<Vertex> points(7);
  std::iota(points.begin(), points.end(), 0u);
  const auto edgeless = induced_subgraph(h, points);
  EXPECT_EQ(edgeless.graph.edge_count(), 0u);
  EXPECT_EQ(edgeless.graph.size_a(), 7u);
  EXPECT_EQ(edgeless.graph.size_b(), 0u);

  for (Vertex x = 0; x < h.order(); ++x) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < h.order(); ++v) {
      const auto nb = h.neighbors(x);
      if (v != x && !std::binary_search(nb.begin(), nb.end(), v)) keep.push_back(v);
    }
    const auto sub = induced_subgraph(h, keep);
    EXPECT_EQ(sub.graph.order(), 10u);
    const auto ds = degree_sets(sub.graph);
    std::set<std::uint32_t> degrees;
    for (auto [d, c] : ds.a) degrees.insert(d);
    for (auto [d, c] : ds.b) degrees.insert(d);
    EXPECT_EQ(degrees, (std::set<std::uint32_t>{2, 3}));
  }

  const std::vector<Vertex> bad = {0, 14};
  EXPECT_THROW(induced_subgraph(h, bad), ParameterError);
}

TEST(InducedSubgraph, PreservesPartsAndOrder) {
  const auto h = heawood();
  const std::vector<Vertex> keep = {12, 3, 0, 9, 3};
  const auto sub = induced_subgraph(h, keep);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 3, 9, 12}));
  EXPECT_EQ(sub.graph.size_a(), 2u);
  EXPECT_EQ(sub.graph.size_b(), 2u);
}

TEST(Properties, SteinerIncidenceGraphsHaveNoFourCycles) {
  for (std::uint32_t v = 7; v <= 45; v += 2) {
    if (v % 6 != 1 && v % 6 != 3) continue;
    const auto g = incidence_graph(sts(v));
    EXPECT_FALSE(has_four_cycle(g)) << v;
    EXPECT_EQ(girth(g), Girth(6));
  }
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    EXPECT_FALSE(has_four_cycle(incidence_graph(affine_plane(q))));
    EXPECT_FALSE(has_four_cycle(incidence_graph(projective_plane(q))));
  }
  EXPECT_TRUE(has_four_cycle(testing::cycle(4)));
}

TEST(Properties, HandshakeOnBiregularGraphs) {
  for (const auto& g : {incidence_graph(sts(13)), incidence_graph(affine_plane(4)),
                        incidence_graph(elliptic_quadric_gq(2))}) {
    const auto degs = part_degrees(g);
    ASSERT_TRUE(degs.has_value());
    EXPECT_EQ(static_cast<std::size_t>(g.size_a()) * degs->first, g.edge_count());
    EXPECT_EQ(static_cast<std::size_t>(g.size_b()) * degs->second, g.edge_count());
  }
}

TEST(Components, Count) {
  EXPECT_EQ(component_count(heawood()), 1u);
  EXPECT_EQ(component_count(path5()), 1u);
  EXPECT_EQ(component_count(BipartiteGraph(2, 3, {})), 5u);
}

} // namespace
} // namespace bbcage

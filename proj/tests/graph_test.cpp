#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "tvs/graph.hpp"
#include "test_util.hpp"

namespace tvs {
namespace {

// K_n with the i + j <= n + 1 rule, evaluated pair by pair (1-based i, j).
std::vector<Edge> complete_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return edges;
}

std::vector<label_t> sum_rule_labels(std::size_t n) {
  std::vector<label_t> labels;
  for (const Edge& e : complete_edges(n)) labels.push_back((e.u + 1) + (e.v + 1) <= n + 1 ? 1 : 2);
  return labels;
}

// Independent vertex-sum oracle: walk the edge list, not the adjacency.
std::vector<label_t> sums_by_edge_walk(const Graph& g, const std::vector<label_t>& edge_labels) {
  std::vector<label_t> sums(g.order(), 0);
  for (std::size_t e = 0; e < g.size(); ++e) {
    sums[g.edge(e).u] += edge_labels[e];
    sums[g.edge(e).v] += edge_labels[e];
  }
  return sums;
}

TEST(BuildGraph, Triangle) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  for (vertex_t v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(g.min_degree(), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(BuildGraph, DuplicateEdgeRejected) {
  try {
    build_graph(2, {{0, 1}, {0, 1}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::duplicate_edge);
  }
  // reversed orientation is the same edge
  try {
    build_graph(2, {{0, 1}, {1, 0}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::duplicate_edge);
  }
}

TEST(BuildGraph, SelfLoopAndRangeHaveDistinctKinds) {
  try {
    build_graph(2, {{1, 1}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::self_loop);
  }
  try {
    build_graph(2, {{0, 2}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::index_out_of_range);
  }
}

TEST(BuildGraph, DisjointTriangles) {
  const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  for (vertex_t v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
  for (std::size_t e : g.incident(0)) EXPECT_LT(g.edge(e).other(0), 3u);
  for (std::size_t e : g.incident(4)) EXPECT_GE(g.edge(e).other(4), 3u);
}

TEST(BuildGraph, AdjacencyMatchesEdges) {
  const auto edges = complete_edges(5);
  const Graph g = build_graph(5, edges);
  EXPECT_EQ(g.edges(), edges);
  for (vertex_t v = 0; v < 5; ++v) {
    for (std::size_t e : g.incident(v)) EXPECT_TRUE(g.edge(e).u == v || g.edge(e).v == v);
  }
}

TEST(WeightProfile, ConstantEdgeLabelsOnTriangle) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const WeightProfile p = weight_profile(g, {{1, 1, 2}, {1, 1, 1}, 2});
  EXPECT_EQ(p.vertex_sums, (std::vector<label_t>{2, 2, 2}));
  EXPECT_EQ(p.weights, (std::vector<label_t>{3, 3, 4}));
}

TEST(WeightProfile, CompleteGraphSumRule) {
  const Graph g = build_graph(4, complete_edges(4));
  const auto labels = sum_rule_labels(4);
  // Frozen from the edge-walk oracle: v_3 meets only v_3 v_4 with label 2.
  const std::vector<label_t> expected_sums{3, 4, 4, 5};
  ASSERT_EQ(sums_by_edge_walk(g, labels), expected_sums);

  const WeightProfile p = weight_profile(g, {{1, 1, 2, 2}, labels, 2});
  EXPECT_EQ(p.vertex_sums, expected_sums);
  EXPECT_EQ(p.weights, (std::vector<label_t>{4, 5, 6, 7}));

  // vertex labels (1,1,1,2) collide at v_2 / v_3
  const WeightProfile q = weight_profile(g, {{1, 1, 1, 2}, labels, 2});
  EXPECT_EQ(q.weights, (std::vector<label_t>{4, 5, 5, 7}));
}

TEST(WeightProfile, SingleEdge) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_EQ(weight_profile(g, {{1, 2}, {1}, 2}).weights, (std::vector<label_t>{2, 3}));
}

TEST(WeightProfile, LengthMismatch) {
  const Graph g = build_graph(2, {{0, 1}});
  try {
    weight_profile(g, {{1}, {1}, 1});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::length_mismatch);
  }
  EXPECT_THROW(weight_profile(g, {{1, 1}, {1, 1}, 1}), GraphError);
}

TEST(WeightProfile, OverflowIsAnError) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  const label_t big = std::numeric_limits<label_t>::max() / 2 + 1;
  try {
    weight_profile(g, {{1, 1, 1}, {big, big}, big});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::overflow);
  }
}

TEST(Verify, CompleteGraphIrregular) {
  const Graph g = build_graph(4, complete_edges(4));
  const VerificationReport r = verify(g, {{1, 1, 2, 2}, sum_rule_labels(4), 2});
  EXPECT_TRUE(r.is_irregular);
  EXPECT_FALSE(r.duplicate_weight_witness);
  EXPECT_EQ(r.max_label_used, 2);
  EXPECT_EQ(r.weight_range, (std::pair<label_t, label_t>{4, 7}));
}

TEST(Verify, SymmetricTriangleHasWitness) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const VerificationReport r = verify(g, {{1, 1, 1}, {1, 1, 1}, 1});
  EXPECT_FALSE(r.is_irregular);
  ASSERT_TRUE(r.duplicate_weight_witness);
  const auto [a, b] = *r.duplicate_weight_witness;
  EXPECT_NE(a, b);
  const auto w = weight_profile(g, {{1, 1, 1}, {1, 1, 1}, 1}).weights;
  EXPECT_EQ(w[a], w[b]);
}

TEST(Verify, MaxLabelUsedMayBeBelowDeclared) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_EQ(verify(g, {{1, 2}, {1}, 9}).max_label_used, 2);
}

TEST(SumDistribution, CycleSegments) {
  // C_10, s = 4: four 1-edges, one (s,1) pair, four s-edges.
  const Graph g = test::cycle_graph(10);
  const std::vector<label_t> labels{1, 1, 1, 1, 4, 1, 4, 4, 4, 4};
  const SumDistribution d = sum_distribution(g, labels);
  EXPECT_EQ(d.classes, (std::vector<SumClass>{{2, 3}, {5, 4}, {8, 3}}));
}

TEST(SumDistribution, AllOnes) {
  const Graph g = test::cycle_graph(7);
  const SumDistribution d = sum_distribution(g, std::vector<label_t>(7, 1));
  EXPECT_EQ(d.classes, (std::vector<SumClass>{{2, 7}}));
}

TEST(SumDistribution, PrismScheme) {
  // D_4, s = 3: outer cycle 1, inner cycle 3, rungs (1, 1, 3, 3).
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 4; ++i) edges.push_back({i, (i + 1) % 4});
  for (std::size_t i = 0; i < 4; ++i) edges.push_back({4 + i, 4 + (i + 1) % 4});
  for (std::size_t i = 0; i < 4; ++i) edges.push_back({i, 4 + i});
  const Graph g = build_graph(8, edges);
  const std::vector<label_t> labels{1, 1, 1, 1, 3, 3, 3, 3, 1, 1, 3, 3};
  // outer: 1+1+1 = 3 or 1+1+3 = s+2; inner: 3+3+1 = 2s+1 or 3s
  EXPECT_EQ(sum_distribution(g, labels).classes,
            (std::vector<SumClass>{{3, 2}, {5, 2}, {7, 2}, {9, 2}}));
}

TEST(SumDistribution, LengthMismatch) {
  EXPECT_THROW(sum_distribution(test::cycle_graph(4), std::vector<label_t>{1, 1}), GraphError);
}

class GraphProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(GraphProperties, WeightIdentitiesOnRandomLabelings) {
  std::mt19937_64 rng(GetParam());
  for (int round = 0; round < 50; ++round) {
    const Graph g = test::random_graph(rng, 2, 10);
    const TotalLabeling lab = test::random_labeling(rng, g, 6);
    const WeightProfile p = weight_profile(g, lab);

    EXPECT_EQ(p.vertex_sums, sums_by_edge_walk(g, lab.edge_labels));
    for (vertex_t v = 0; v < g.order(); ++v) {
      EXPECT_EQ(p.weights[v] - p.vertex_sums[v], lab.vertex_labels[v]);
    }
    // handshake
    EXPECT_EQ(std::accumulate(p.vertex_sums.begin(), p.vertex_sums.end(), label_t{0}),
              2 * std::accumulate(lab.edge_labels.begin(), lab.edge_labels.end(), label_t{0}));
  }
}

TEST_P(GraphProperties, VerifyAndDistributionInvariantUnderRelabeling) {
  std::mt19937_64 rng(GetParam() * 7919u);
  for (int round = 0; round < 50; ++round) {
    const Graph g = test::random_graph(rng, 2, 9);
    const TotalLabeling lab = test::random_labeling(rng, g, 4);

    std::vector<vertex_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), vertex_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    const Graph h = build_graph(g.order(), edges);
    TotalLabeling moved = lab;
    for (vertex_t v = 0; v < g.order(); ++v) moved.vertex_labels[perm[v]] = lab.vertex_labels[v];

    EXPECT_EQ(verify(g, lab).is_irregular, verify(h, moved).is_irregular);
    const SumDistribution d = sum_distribution(g, lab.edge_labels);
    EXPECT_EQ(d.classes, sum_distribution(h, moved.edge_labels).classes);
    EXPECT_EQ(d.total(), g.order());
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
      EXPECT_GT(d.classes[i].count, 0u);
      if (i) {
        EXPECT_LT(d.classes[i - 1].sum, d.classes[i].sum);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperties, ::testing::Values(1u, 2u, 3u, 4u));

}  // namespace
}  // namespace tvs

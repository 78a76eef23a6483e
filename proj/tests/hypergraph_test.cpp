#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/instances.hpp"

namespace hyperlag {
namespace {

EdgeMask set_of(std::initializer_list<int> labels) {
  EdgeMask m = 0;
  for (int v : labels) m |= vertex_bit(v);
  return m;
}

// Brute-force maximum complete subgraph order: every subset of 1..n.
int brute_force_order(const Hypergraph& h, const std::set<int>& types) {
  int best = 0;
  const EdgeMask limit = EdgeMask{1} << h.n();
  for (EdgeMask s = 0; s < limit; ++s) {
    bool ok = true;
    for (int r : types) {
      if (r > popcount(s)) continue;
      for_each_subset(s, r, [&](EdgeMask sub) { ok = ok && h.has_edge(sub); });
    }
    if (ok) best = std::max(best, popcount(s));
  }
  return best;
}

TEST(Build, GroupsEdgesByCardinality) {
  auto h = Hypergraph::build(3, {{1}, {1, 2, 3}});
  EXPECT_EQ(h.edge_types(), (std::set<int>{1, 3}));
  EXPECT_EQ(h.edge_count(1), 1u);
  EXPECT_EQ(h.edge_count(3), 1u);
  EXPECT_EQ(h.edge_count(2), 0u);
}

TEST(Build, RejectsDuplicateEdge) {
  EXPECT_THROW(Hypergraph::build(2, {{1, 2}, {1, 2}}), HypergraphError);
  EXPECT_THROW(Hypergraph::build(2, {{1, 2}, {2, 1}}), HypergraphError);
}

TEST(Build, RejectsOutOfRangeAndEmpty) {
  EXPECT_THROW(Hypergraph::build(3, {{1, 4}}), HypergraphError);
  EXPECT_THROW(Hypergraph::build(3, {{0, 1}}), HypergraphError);
  EXPECT_THROW(Hypergraph::build(3, {{}}), HypergraphError);
  EXPECT_THROW(Hypergraph::build(0, {}), HypergraphError);
  EXPECT_THROW(Hypergraph::build(65, {}), HypergraphError);
  EXPECT_THROW(Hypergraph::build(3, {{1, 1}}), HypergraphError);
}

TEST(Build, CompleteThreeUniformLevel) {
  auto h = Hypergraph::build(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  EXPECT_EQ(h.edge_types(), (std::set<int>{3}));
  EXPECT_EQ(h.edge_count(3), 4u);
}

TEST(Build, EdgesAreCanonicallyOrdered) {
  auto h = Hypergraph::build(4, {{3, 4}, {1, 4}, {2, 3}, {1, 2}, {4}, {1}});
  std::vector<std::vector<int>> expected{{1}, {4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}};
  EXPECT_EQ(h.edge_lists(), expected);
}

TEST(Complete, BinomialCounts) {
  auto k5 = complete(5, {1, 3});
  EXPECT_EQ(k5.edge_count(1), 5u);
  EXPECT_EQ(k5.edge_count(3), 10u);
  EXPECT_EQ(complete(4, {3}).edge_count(3), 4u);
  EXPECT_EQ(complete(2, {1, 2}).total_edges(), 3u);
  EXPECT_THROW(complete(2, {3}), HypergraphError);
}

TEST(Neighborhood, CompleteThreeGraph) {
  auto k4 = complete(4, {3});
  auto n1 = neighborhood(k4, 3, 1);
  EXPECT_EQ(n1.arity, 2);
  EXPECT_EQ(n1.sets, (std::vector<EdgeMask>{set_of({2, 3}), set_of({2, 4}), set_of({3, 4})}));
  auto n12 = pair_neighborhood(k4, 3, 1, 2);
  EXPECT_EQ(n12.arity, 1);
  EXPECT_EQ(n12.sets, (std::vector<EdgeMask>{set_of({3}), set_of({4})}));
}

TEST(Neighborhood, VertexOutsideEveryEdge) {
  auto h = Hypergraph::build(4, {{1, 2, 3}});
  EXPECT_TRUE(neighborhood(h, 3, 4).sets.empty());
}

TEST(Neighborhood, Errors) {
  auto h = Hypergraph::build(4, {{1}, {1, 2, 3}});
  EXPECT_THROW(neighborhood(h, 2, 1), HypergraphError);
  EXPECT_THROW(neighborhood(h, 1, 1), HypergraphError);
  EXPECT_THROW(neighborhood(h, 3, 5), HypergraphError);
  EXPECT_THROW(pair_neighborhood(h, 3, 2, 2), HypergraphError);
}

TEST(Neighborhood, DifferenceExcludesSharedAndPivot) {
  // E^3 = {123, 124, 234}: E_1 = {23, 24}; A=23 has 23∪{4}=234 ∈ E, so the
  // 1\4 neighborhood keeps only sets without 4 whose swap is absent.
  auto h = Hypergraph::build(4, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
  auto d = difference_neighborhood(h, 3, 1, 4);
  EXPECT_TRUE(d.sets.empty());
  auto d2 = difference_neighborhood(h, 3, 4, 1);
  // E_4 = {12, 23}; 12 contains 1 and is excluded; 23 ∪ {1} = 123 ∈ E.
  EXPECT_TRUE(d2.sets.empty());
  auto d3 = difference_neighborhood(h, 3, 3, 1);
  // E_3 = {12, 24}; 24 ∪ {1} = 124 ∈ E; 12 contains 1.
  EXPECT_TRUE(d3.sets.empty());
  auto g = Hypergraph::build(5, {{1, 2, 3}, {2, 3, 5}});
  EXPECT_EQ(difference_neighborhood(g, 3, 1, 4).sets, (std::vector<EdgeMask>{set_of({2, 3})}));
  EXPECT_TRUE(difference_neighborhood(g, 3, 1, 5).sets.empty());
}

TEST(MaxComplete, ExamplesFromDefinition) {
  // K_5^{1,3} plus two isolated vertices.
  std::vector<std::vector<int>> edges = complete(5, {1, 3}).edge_lists();
  auto h = Hypergraph::build(7, edges);
  EXPECT_EQ(max_complete_subgraph_order(h, {1, 3}).order, 5);

  auto path = Hypergraph::build(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(max_complete_subgraph_order(path, {2}).order, 2);

  auto g = Hypergraph::build(4, {{1}, {2}, {3}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  auto res = max_complete_subgraph_order(g, {1, 3});
  EXPECT_EQ(res.order, brute_force_order(g, {1, 3}));
  EXPECT_EQ(res.order, 3);
  EXPECT_EQ(res.witness.labels(), (std::vector<int>{1, 2, 3}));
}

TEST(MaxComplete, VacuousArity) {
  // No 3-subsets exist in a pair, so any pair is complete for {3}.
  auto h = Hypergraph::build(5, {{1, 2, 3}});
  EXPECT_EQ(max_complete_subgraph_order(h, {3}).order, 3);
  auto lone = Hypergraph::build(5, {{4, 5, 1}});
  EXPECT_EQ(max_complete_subgraph_order(lone, {3}).order, 3);
}

TEST(MaxComplete, RejectsTypesOutsideR) {
  auto h = Hypergraph::build(3, {{1, 2}});
  EXPECT_THROW(max_complete_subgraph_order(h, {1, 2}), HypergraphError);
}

TEST(MaxComplete, CompleteHypergraphHasOrderT) {
  for (int t = 1; t <= 7; ++t) {
    for (const std::set<int>& types :
         {std::set<int>{1}, std::set<int>{1, 2}, std::set<int>{1, 3}, std::set<int>{2, 3}}) {
      if (*types.rbegin() > t) continue;
      EXPECT_EQ(max_complete_subgraph_order(complete(t, types), types).order, t);
    }
  }
}

TEST(Properties, DegreeSumIdentity) {
  instances::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 6;
    auto h = instances::random_hypergraph(rng, n, {2, 3, 4}, 0.4);
    for (int r : h.edge_types()) {
      std::size_t sum = 0;
      for (int i = 1; i <= n; ++i) sum += neighborhood(h, r, i).size();
      EXPECT_EQ(sum, r * h.edge_count(r));
    }
  }
}

TEST(Properties, NeighborhoodPartition) {
  instances::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    auto h = instances::random_hypergraph(rng, n, {2, 3}, 0.5);
    for (int r : h.edge_types()) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const auto all = neighborhood(h, r, i);
          const auto diff = difference_neighborhood(h, r, i, j);
          const auto pair = pair_neighborhood(h, r, i, j);
          std::size_t shared = 0;
          for (EdgeMask a : all.sets) {
            const bool has_j = a & vertex_bit(j);
            const bool in_diff = diff.contains(a);
            const bool in_pair = has_j && pair.contains(a & ~vertex_bit(j));
            const bool in_shared = !has_j && h.has_edge(a | vertex_bit(j));
            EXPECT_EQ(int(in_diff) + int(in_pair) + int(in_shared), 1);
            shared += in_shared;
          }
          EXPECT_EQ(diff.size() + pair.size() + shared, all.size());
        }
      }
    }
  }
}

TEST(Properties, CliqueAgreesWithBruteForceAndIsMonotone) {
  instances::Rng rng(13);
  const std::vector<std::set<int>> type_sets{{2}, {1, 2}, {1, 3}, {3}, {1, 2, 3}};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 8;
    const auto& types = type_sets[trial % type_sets.size()];
    auto h = instances::random_hypergraph(rng, n, types, 0.55);
    const auto res = max_complete_subgraph_order(h, types);
    ASSERT_EQ(res.order, brute_force_order(h, types));
    EXPECT_TRUE(is_complete_on(h, res.witness.mask(), types));
    EXPECT_EQ(res.witness.size(), res.order);

    // Adding any absent edge never lowers the order.
    auto edges = h.all_edges();
    const int r = *types.begin();
    std::vector<EdgeMask> absent;
    for_each_subset((EdgeMask{1} << n) - 1, r, [&](EdgeMask e) {
      if (!h.has_edge(e)) absent.push_back(e);
    });
    if (absent.empty()) continue;
    edges.push_back(absent[trial % absent.size()]);
    auto bigger = Hypergraph::from_masks(n, edges);
    EXPECT_GE(max_complete_subgraph_order(bigger, types).order, res.order);
  }
}

TEST(Properties, LexOrderMatchesSequenceOrder) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const EdgeMask a = rng() & 0xFFF;
    const EdgeMask b = rng() & 0xFFF;
    EXPECT_EQ(lex_less(a, b), labels_from_mask(a) < labels_from_mask(b)) << a << " " << b;
  }
}

}  // namespace
}  // namespace hyperlag

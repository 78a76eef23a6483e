#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hyperlag/instances.hpp"
#include "hyperlag/optimizer.hpp"

namespace hyperlag {
namespace {

OptimizerSettings quick(int restarts = 30, std::uint64_t seed = 1) {
  OptimizerSettings s;
  s.restarts = restarts;
  s.seed = seed;
  s.threads = 1;
  return s;
}

TEST(Maximize, PathGraph) {
  auto path = Hypergraph::build(3, {{1, 2}, {2, 3}});
  auto res = maximize(path, quick());
  EXPECT_NEAR(res.value, 0.5, 1e-9);
  ASSERT_TRUE(res.uniform_value.has_value());
  EXPECT_NEAR(*res.uniform_value, 0.25, 1e-9);
  // Support minimization leaves one edge.
  EXPECT_EQ(res.support.size(), 2);
}

TEST(Maximize, CompleteOneThreeOnFive) {
  auto res = maximize(complete(5, {1, 3}), quick());
  EXPECT_NEAR(res.value, 1.48, 1e-9);
  EXPECT_LE(res.kkt_residual, 1e-7);
  EXPECT_TRUE(res.cover_violations.empty());
  EXPECT_FALSE(res.uniform_value.has_value());
}

TEST(Maximize, CompleteHypergraphMatchesClosedForm) {
  for (const std::set<int>& types :
       {std::set<int>{1, 2, 3}, std::set<int>{2}, std::set<int>{1, 2}, std::set<int>{1, 4}}) {
    auto h = complete(6, types);
    auto res = maximize(h, quick());
    EXPECT_NEAR(res.value, closed_form(6, types), 1e-7);
  }
}

TEST(Maximize, NeverBelowGridOracle) {
  instances::Rng rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + trial % 3;
    auto h = instances::random_hypergraph(rng, n, {1, 2, 3}, 0.5);
    auto res = maximize(h, quick());
    auto oracle = grid_oracle(h, 30);
    EXPECT_GE(res.value, oracle.value - 1e-9);
    EXPECT_LE(res.value, oracle.value + oracle.gap_bound);
  }
}

TEST(Maximize, Errors) {
  EXPECT_THROW(maximize(Hypergraph{}), OptimizerError);
  auto h = complete(3, {2});
  auto bad = quick();
  bad.restarts = 0;
  EXPECT_THROW(maximize(h, bad), OptimizerError);
}

TEST(Maximize, DeterministicAcrossRunsAndThreadCounts) {
  instances::Rng rng(22);
  for (int trial = 0; trial < 8; ++trial) {
    auto h = instances::random_hypergraph(rng, 7, {1, 2, 3}, 0.4);
    auto a = maximize(h, quick(40, 9));
    auto b = maximize(h, quick(40, 9));
    auto cfg = quick(40, 9);
    cfg.threads = 3;
    auto c = maximize(h, cfg);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.value, c.value);
    ASSERT_EQ(a.x.size(), c.x.size());
    for (std::size_t i = 0; i < a.x.size(); ++i) {
      EXPECT_EQ(a.x[i], b.x[i]);
      EXPECT_EQ(a.x[i], c.x[i]);
    }
  }
}

TEST(Maximize, ResultIsFeasible) {
  instances::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = instances::random_hypergraph(rng, 4 + trial % 6, {1, 2, 3}, 0.4);
    auto res = maximize(h, quick(15));
    double sum = 0.0;
    for (double v : res.x.values()) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_EQ(res.value, eval(h, res.x));
  }
}

TEST(Ascend, ReachesVertexOptimumOnSingleton) {
  auto h = Hypergraph::build(3, {{2}});
  std::vector<double> start(3, 1.0 / 3.0);
  auto r = ascend(h, start, 0b111, 1000, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_NEAR(r.x[1], 1.0, 1e-12);
}

TEST(Projection, Properties) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> nd(0.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 12;
    std::vector<double> y(n);
    for (double& v : y) v = nd(rng);
    EdgeMask allowed = 0;
    while (allowed == 0) allowed = rng() & ((EdgeMask{1} << n) - 1);
    auto p = y;
    project_to_simplex(p, allowed);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      EXPECT_GE(p[i], 0.0);
      if (!(allowed & vertex_bit(i + 1))) EXPECT_EQ(p[i], 0.0);
      sum += p[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    // Idempotent.
    auto q = p;
    project_to_simplex(q, allowed);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(q[i], p[i], 1e-14);
    // Optimality: (y − p)·(z − p) ≤ 0 for vertices z of the allowed face.
    for (int k = 0; k < n; ++k) {
      if (!(allowed & vertex_bit(k + 1))) continue;
      double ip = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!(allowed & vertex_bit(i + 1))) continue;
        ip += (y[i] - p[i]) * ((i == k ? 1.0 : 0.0) - p[i]);
      }
      EXPECT_LE(ip, 1e-10);
    }
  }
}

TEST(Optimality, UncoveredSupportPair) {
  auto h = Hypergraph::build(4, {{1, 2}, {3, 4}});
  auto rep = check_optimality(h, Weighting::uniform(4));
  EXPECT_NEAR(rep.kkt_residual, 0.0, 1e-15);
  EXPECT_NE(std::find(rep.cover_violations.begin(), rep.cover_violations.end(),
                      std::pair<int, int>{1, 3}),
            rep.cover_violations.end());
  EXPECT_EQ(rep.cover_violations.size(), 4u);
}

TEST(Optimality, UnequalPartials) {
  auto h = Hypergraph::build(3, {{1}, {1, 2}});
  auto x = Weighting::trusted({0.5, 0.5, 0.0});
  auto rep = check_optimality(h, x);
  // Partials 1 + 2·0.5 = 2 and 2·0.5 = 1 around a mean of 1.5.
  EXPECT_NEAR(rep.kkt_residual, 0.5, 1e-14);
  EXPECT_TRUE(rep.cover_violations.empty());
}

TEST(Optimality, SymmetricAndSkewedPoints) {
  auto h = complete(5, {1, 3});
  auto sym = check_optimality(h, Weighting::uniform(5));
  EXPECT_NEAR(sym.kkt_residual, 0.0, 1e-14);
  EXPECT_TRUE(sym.cover_violations.empty());
  // Both support partials equal 1, so the on-support residual vanishes; the
  // point is still not optimal because x3..x5 have partial 1 + 6·0.09.
  const auto skewed = Weighting::trusted({0.9, 0.1, 0, 0, 0});
  auto skew = check_optimality(h, skewed);
  EXPECT_NEAR(skew.kkt_residual, 0.0, 1e-15);
  auto g = gradient(h, skewed);
  EXPECT_NEAR(g[2], 1.54, 1e-14);
  EXPECT_GT(g[2], g[0]);
  EXPECT_LT(eval(h, skewed), closed_form(5, {1, 3}));
}

TEST(Oracle, Examples) {
  auto k3 = grid_oracle(complete(3, {2}), 30);
  EXPECT_NEAR(k3.value, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(k3.counts, (std::vector<int>{10, 10, 10}));

  auto single = grid_oracle(Hypergraph::build(3, {{2}}), 7);
  EXPECT_NEAR(single.value, 1.0, 1e-15);
  EXPECT_EQ(single.counts, (std::vector<int>{0, 7, 0}));

  auto k4 = grid_oracle(complete(4, {1, 3}), 40);
  EXPECT_NEAR(k4.value, closed_form(4, {1, 3}), 1e-12);
  EXPECT_GE(k4.value, 1.374);
  EXPECT_NEAR(k4.gap_bound, (4 * 1 + 6 * 4 * 3) / 40.0, 1e-14);
}

TEST(Oracle, GridCountsAndCap) {
  EXPECT_EQ(grid_size(3, 30), 496u);
  EXPECT_EQ(grid_size(1, 10), 1u);
  EXPECT_THROW(grid_oracle(complete(12, {2}), 200, 1000), OptimizerError);
  EXPECT_THROW(grid_oracle(complete(3, {2}), 0), OptimizerError);
}

TEST(Oracle, ExhaustiveOverSmallGrid) {
  // Direct enumeration of every composition as an independent check.
  instances::Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = instances::random_hypergraph(rng, 3, {1, 2, 3}, 0.5);
    const int m = 12;
    double best = -1.0;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; a + b <= m; ++b) {
        std::vector<double> x{double(a) / m, double(b) / m, double(m - a - b) / m};
        best = std::max(best, eval(h, x));
      }
    EXPECT_NEAR(grid_oracle(h, m).value, best, 1e-14);
  }
}

}  // namespace
}  // namespace hyperlag

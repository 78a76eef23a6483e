#include "hyperlag/instances.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hyperlag::instances {

namespace {

EdgeMask first_vertices(int k) { return (EdgeMask{1} << k) - 1; }

// Random relabeling of all edges by a permutation of 1..n.
Hypergraph relabeled(Rng& rng, int n, const std::vector<EdgeMask>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeMask> out;
  out.reserve(edges.size());
  for (EdgeMask e : edges) {
    EdgeMask m = 0;
    for (EdgeMask b = e; b != 0; b &= b - 1) {
      m |= EdgeMask{1} << perm[__builtin_ctzll(b)];
    }
    out.push_back(m);
  }
  return Hypergraph::from_masks(n, out);
}

bool coin(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Each r-subset of 1..n not already present joins with probability p.
void sprinkle(Rng& rng, std::vector<EdgeMask>& edges, int n, int r, double p,
              EdgeMask excluded_within) {
  for_each_subset(first_vertices(n), r, [&](EdgeMask e) {
    if ((e & ~excluded_within) == 0) return;
    if (coin(rng, p)) edges.push_back(e);
  });
}

}  // namespace

Hypergraph random_hypergraph(Rng& rng, int n, const std::set<int>& types, double p) {
  if (n < 1 || n > kMaxVertices) throw HypergraphError("n must lie in 1..64");
  std::vector<EdgeMask> edges;
  for (int r : types) {
    if (r < 1 || r > n) {
      throw HypergraphError("edge size " + std::to_string(r) + " needs 1 <= r <= n");
    }
    std::vector<EdgeMask> level;
    for_each_subset(first_vertices(n), r, [&](EdgeMask e) {
      if (coin(rng, p)) level.push_back(e);
    });
    if (level.empty()) {
      std::vector<EdgeMask> all;
      for_each_subset(first_vertices(n), r, [&](EdgeMask e) { all.push_back(e); });
      level.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    }
    edges.insert(edges.end(), level.begin(), level.end());
  }
  return Hypergraph::from_masks(n, edges);
}

Hypergraph random_graph(Rng& rng, int n, double p) {
  return random_hypergraph(rng, n, {2}, p);
}

Hypergraph onr_instance(Rng& rng, int r, int t, int n, double p) {
  std::vector<EdgeMask> edges;
  const EdgeMask core = first_vertices(t);
  for (int v = 1; v <= t; ++v) edges.push_back(vertex_bit(v));
  for_each_subset(core, r, [&](EdgeMask e) { edges.push_back(e); });
  sprinkle(rng, edges, n, r, p, core);
  return relabeled(rng, n, edges);
}

Hypergraph on13_instance(Rng& rng, int t, int s, int n) {
  std::vector<EdgeMask> edges;
  const EdgeMask clique = first_vertices(s);
  for (int v = 1; v <= t; ++v) edges.push_back(vertex_bit(v));
  for_each_subset(clique, 3, [&](EdgeMask e) { edges.push_back(e); });
  std::vector<EdgeMask> outside;
  for_each_subset(first_vertices(n), 3, [&](EdgeMask e) {
    if (e & ~clique) outside.push_back(e);
  });
  std::shuffle(outside.begin(), outside.end(), rng);
  const std::size_t budget = static_cast<std::size_t>((t - 1) * (t - 2) / 2);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(
      0, std::min(budget, outside.size()))(rng);
  edges.insert(edges.end(), outside.begin(), outside.begin() + extra);
  return relabeled(rng, n, edges);
}

Hypergraph on123_instance(Rng& rng, int t, int n, double p) {
  std::vector<EdgeMask> edges;
  const EdgeMask core = first_vertices(t);
  for (int v = 1; v <= t; ++v) edges.push_back(vertex_bit(v));
  for (int r : {2, 3}) {
    for_each_subset(core, r, [&](EdgeMask e) { edges.push_back(e); });
    sprinkle(rng, edges, n, r, p, core);
  }
  return relabeled(rng, n, edges);
}

Hypergraph peng12_instance(Rng& rng, int t, int n, double p) {
  while (true) {
    std::vector<EdgeMask> edges;
    const EdgeMask core = first_vertices(t);
    for (int v = 1; v <= n; ++v) {
      if (v <= t || coin(rng, p)) edges.push_back(vertex_bit(v));
    }
    for_each_subset(core, 2, [&](EdgeMask e) { edges.push_back(e); });
    sprinkle(rng, edges, n, 2, p, core);
    auto h = relabeled(rng, n, edges);
    if (max_complete_subgraph_order(h, {1, 2}).order == t) return h;
  }
}

Hypergraph peng3_instance(Rng& rng, int t, int n) {
  std::vector<EdgeMask> edges;
  const EdgeMask core = first_vertices(t);
  for_each_subset(core, 3, [&](EdgeMask e) { edges.push_back(e); });
  std::vector<EdgeMask> outside;
  for_each_subset(first_vertices(n), 3, [&](EdgeMask e) {
    if (e & ~core) outside.push_back(e);
  });
  std::shuffle(outside.begin(), outside.end(), rng);
  const std::size_t budget = static_cast<std::size_t>((t - 1) * (t - 2) / 2);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(
      0, std::min(budget, outside.size()))(rng);
  edges.insert(edges.end(), outside.begin(), outside.begin() + extra);
  return relabeled(rng, n, edges);
}

}  // namespace hyperlag::instances

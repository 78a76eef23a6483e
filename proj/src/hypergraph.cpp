#include "hyperlag/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hyperlag {

EdgeMask mask_from_labels(std::span<const int> labels, int n) {
  EdgeMask m = 0;
  for (int v : labels) {
    if (v < 1 || v > n) {
      throw HypergraphError("vertex label " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
    }
    const EdgeMask bit = vertex_bit(v);
    if (m & bit) {
      throw HypergraphError("vertex " + std::to_string(v) +
                            " repeated inside an edge");
    }
    m |= bit;
  }
  return m;
}

std::vector<int> labels_from_mask(EdgeMask mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  for (EdgeMask m = mask; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

int popcount(EdgeMask mask) { return std::popcount(mask); }

bool lex_less(EdgeMask a, EdgeMask b) {
  const EdgeMask diff = a ^ b;
  if (diff == 0) return false;
  const EdgeMask low = diff & (~diff + 1);
  // The smallest differing label belongs to the lexicographically smaller set,
  // unless one sequence is a prefix of the other.
  const EdgeMask below = low - 1;
  const bool a_has = (a & low) != 0;
  if (a_has) {
    // b lacks `low`; if b has no labels above `low` it is a prefix of a.
    return (b & ~below & ~low) != 0;
  }
  return (a & ~below & ~low) == 0;
}

bool NeighborhoodSet::contains(EdgeMask m) const {
  return std::find(sets.begin(), sets.end(), m) != sets.end();
}

Hypergraph::Hypergraph(int n, std::map<int, std::vector<EdgeMask>> levels)
    : n_(n), levels_(std::move(levels)) {
  for (auto& [r, edges] : levels_) {
    std::sort(edges.begin(), edges.end(), lex_less);
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    lookup_.emplace(r, std::move(sorted));
  }
}

Hypergraph Hypergraph::from_masks(int n, std::span<const EdgeMask> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw HypergraphError("vertex count must lie in 1.." +
                          std::to_string(kMaxVertices));
  }
  const EdgeMask universe =
      n == kMaxVertices ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1;
  std::map<int, std::vector<EdgeMask>> levels;
  for (EdgeMask e : edges) {
    if (e == 0) throw HypergraphError("empty edge");
    if (e & ~universe) {
      throw HypergraphError("edge uses a vertex outside 1.." +
                            std::to_string(n));
    }
    const int r = popcount(e);
    if (r > kMaxArity) {
      throw HypergraphError("edge cardinality " + std::to_string(r) +
                            " exceeds " + std::to_string(kMaxArity));
    }
    levels[r].push_back(e);
  }
  for (auto& [r, level] : levels) {
    auto sorted = level;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end());
        it != sorted.end()) {
      std::string msg = "duplicate edge {";
      bool first = true;
      for (int v : labels_from_mask(*it)) {
        msg += (first ? "" : ",") + std::to_string(v);
        first = false;
      }
      throw HypergraphError(msg + "}");
    }
  }
  return Hypergraph(n, std::move(levels));
}

Hypergraph Hypergraph::build(int n,
                             const std::vector<std::vector<int>>& edges) {
  if (n < 1 || n > kMaxVertices) {
    throw HypergraphError("vertex count must lie in 1.." +
                          std::to_string(kMaxVertices));
  }
  std::vector<EdgeMask> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.empty()) throw HypergraphError("empty edge");
    masks.push_back(mask_from_labels(e, n));
  }
  return from_masks(n, masks);
}

std::set<int> Hypergraph::edge_types() const {
  std::set<int> out;
  for (const auto& [r, _] : levels_) out.insert(r);
  return out;
}

std::span<const EdgeMask> Hypergraph::edges(int r) const {
  auto it = levels_.find(r);
  if (it == levels_.end()) return {};
  return it->second;
}

std::size_t Hypergraph::total_edges() const {
  std::size_t total = 0;
  for (const auto& [_, e] : levels_) total += e.size();
  return total;
}

bool Hypergraph::has_edge(EdgeMask e) const {
  auto it = lookup_.find(popcount(e));
  if (it == lookup_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), e);
}

std::vector<EdgeMask> Hypergraph::all_edges() const {
  std::vector<EdgeMask> out;
  out.reserve(total_edges());
  for (const auto& [_, e] : levels_) out.insert(out.end(), e.begin(), e.end());
  return out;
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  for (EdgeMask e : all_edges()) out.push_back(labels_from_mask(e));
  return out;
}

int Hypergraph::degree(int r, int v) const {
  const EdgeMask bit = vertex_bit(v);
  int d = 0;
  for (EdgeMask e : edges(r)) d += (e & bit) != 0;
  return d;
}

Hypergraph complete(int t, const std::set<int>& types) {
  if (t < 1 || t > kMaxVertices) {
    throw HypergraphError("complete hypergraph order must lie in 1.." +
                          std::to_string(kMaxVertices));
  }
  std::vector<EdgeMask> edges;
  const EdgeMask universe =
      t == kMaxVertices ? ~EdgeMask{0} : (EdgeMask{1} << t) - 1;
  for (int r : types) {
    if (r < 1 || r > t) {
      throw HypergraphError("cardinality " + std::to_string(r) +
                            " is not in 1.." + std::to_string(t));
    }
    for_each_subset(universe, r, [&](EdgeMask s) { edges.push_back(s); });
  }
  return Hypergraph::from_masks(t, edges);
}

namespace {

void check_level(const Hypergraph& h, int r) {
  if (r < 2) {
    throw HypergraphError("neighborhoods need cardinality >= 2, got " +
                          std::to_string(r));
  }
  if (!h.has_level(r)) {
    throw HypergraphError("cardinality " + std::to_string(r) +
                          " is not an edge type of the hypergraph");
  }
}

void check_vertex(const Hypergraph& h, int v) {
  if (v < 1 || v > h.n()) {
    throw HypergraphError("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(h.n()));
  }
}

NeighborhoodSet sorted_set(int arity, std::vector<EdgeMask> sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  return NeighborhoodSet{arity, std::move(sets)};
}

}  // namespace

NeighborhoodSet neighborhood(const Hypergraph& h, int r, int i) {
  check_level(h, r);
  check_vertex(h, i);
  const EdgeMask bi = vertex_bit(i);
  std::vector<EdgeMask> out;
  for (EdgeMask e : h.edges(r)) {
    if (e & bi) out.push_back(e & ~bi);
  }
  return sorted_set(r - 1, std::move(out));
}

NeighborhoodSet pair_neighborhood(const Hypergraph& h, int r, int i, int j) {
  check_level(h, r);
  check_vertex(h, i);
  check_vertex(h, j);
  if (i == j) throw HypergraphError("pair neighborhood needs distinct vertices");
  const EdgeMask bij = vertex_bit(i) | vertex_bit(j);
  std::vector<EdgeMask> out;
  for (EdgeMask e : h.edges(r)) {
    if ((e & bij) == bij) out.push_back(e & ~bij);
  }
  return sorted_set(r - 2, std::move(out));
}

NeighborhoodSet difference_neighborhood(const Hypergraph& h, int r, int i,
                                        int j) {
  check_level(h, r);
  check_vertex(h, i);
  check_vertex(h, j);
  if (i == j) {
    throw HypergraphError("difference neighborhood needs distinct vertices");
  }
  const EdgeMask bi = vertex_bit(i);
  const EdgeMask bj = vertex_bit(j);
  std::vector<EdgeMask> out;
  for (EdgeMask e : h.edges(r)) {
    if (!(e & bi) || (e & bj)) continue;
    const EdgeMask a = e & ~bi;
    if (!h.has_edge(a | bj)) out.push_back(a);
  }
  return sorted_set(r - 1, std::move(out));
}

bool is_complete_on(const Hypergraph& h, EdgeMask s,
                    const std::set<int>& types) {
  const int size = popcount(s);
  for (int r : types) {
    if (r > size) continue;
    bool ok = true;
    for_each_subset(s, r, [&](EdgeMask sub) {
      if (ok && !h.has_edge(sub)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Hypergraph& h, const std::set<int>& types)
      : h_(h), types_(types) {}

  CompleteSubgraph run() {
    // Order by descending degree in the smallest non-singleton arity, ties by
    // label.
    int order_level = 0;
    for (int r : types_) {
      if (r >= 2) {
        order_level = r;
        break;
      }
    }
    std::vector<int> cand;
    for (int v = 1; v <= h_.n(); ++v) {
      if (extends(0, v)) cand.push_back(v);
    }
    std::vector<int> deg(h_.n() + 1, 0);
    if (order_level != 0) {
      for (int v = 1; v <= h_.n(); ++v) deg[v] = h_.degree(order_level, v);
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    expand(0, cand);
    return best_;
  }

 private:
  // True when s ∪ {v} is complete, given that s already is.
  bool extends(EdgeMask s, int v) const {
    const int size = popcount(s);
    const EdgeMask bv = vertex_bit(v);
    for (int r : types_) {
      if (r - 1 > size) break;
      bool ok = true;
      for_each_subset(s, r - 1, [&](EdgeMask a) {
        if (ok && !h_.has_edge(a | bv)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  void expand(EdgeMask s, const std::vector<int>& cand) {
    const int size = popcount(s);
    if (size > best_.order) {
      best_.order = size;
      best_.witness = VertexSet(s);
    }
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (size + static_cast<int>(cand.size() - k) <= best_.order) return;
      const EdgeMask next = s | vertex_bit(cand[k]);
      std::vector<int> rest;
      for (std::size_t l = k + 1; l < cand.size(); ++l) {
        if (extends(next, cand[l])) rest.push_back(cand[l]);
      }
      expand(next, rest);
    }
  }

  const Hypergraph& h_;
  const std::set<int>& types_;
  CompleteSubgraph best_;
};

}  // namespace

CompleteSubgraph max_complete_subgraph_order(const Hypergraph& h,
                                             const std::set<int>& types) {
  for (int r : types) {
    if (!h.has_level(r)) {
      throw HypergraphError("cardinality " + std::to_string(r) +
                            " is not an edge type of the hypergraph");
    }
  }
  return CliqueSearch(h, types).run();
}

}  // namespace hyperlag

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperlag {

/// Vertex subsets are fixed-width bitmasks; bit (v-1) stands for vertex v.
using EdgeMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxArity = 20;

class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

EdgeMask mask_from_labels(std::span<const int> labels, int n);
std::vector<int> labels_from_mask(EdgeMask mask);
int popcount(EdgeMask mask);
inline EdgeMask vertex_bit(int v) { return EdgeMask{1} << (v - 1); }

/// Lexicographic order on the increasing label sequences of two masks.
bool lex_less(EdgeMask a, EdgeMask b);

/// Set of 1-based vertex labels (cliques, supports, witnesses).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(EdgeMask mask) : mask_(mask) {}

  EdgeMask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool contains(int v) const { return (mask_ & vertex_bit(v)) != 0; }
  std::vector<int> labels() const { return labels_from_mask(mask_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  EdgeMask mask_ = 0;
};

/// Collection of vertex subsets of a fixed arity (E_i^r, E_ij^r, E_{i\j}^r).
struct NeighborhoodSet {
  int arity = 0;
  std::vector<EdgeMask> sets;  // canonical lexicographic order

  std::size_t size() const { return sets.size(); }
  bool contains(EdgeMask m) const;
};

/// Immutable non-uniform hypergraph on vertices 1..n with edges grouped by
/// cardinality. Levels are never empty; edges within a level are unique and
/// kept in lexicographic order.
class Hypergraph {
 public:
  /// Placeholder with no vertices; every real hypergraph comes from build,
  /// from_masks or complete.
  Hypergraph() = default;

  /// Validating constructor from label lists. Throws HypergraphError on
  /// out-of-range labels, empty edges, repeated labels inside an edge, and
  /// duplicate edges.
  static Hypergraph build(int n, const std::vector<std::vector<int>>& edges);

  /// Same contract as build, for edges already encoded as masks.
  static Hypergraph from_masks(int n, std::span<const EdgeMask> edges);

  int n() const { return n_; }
  bool empty() const { return levels_.empty(); }

  /// R(H), ascending.
  std::set<int> edge_types() const;
  const std::map<int, std::vector<EdgeMask>>& levels() const { return levels_; }

  /// Edges of level r in canonical order; empty span when r is absent.
  std::span<const EdgeMask> edges(int r) const;
  std::size_t edge_count(int r) const { return edges(r).size(); }
  std::size_t total_edges() const;

  bool has_edge(EdgeMask e) const;
  bool has_level(int r) const { return levels_.contains(r); }

  /// All edges, ascending cardinality then lexicographic.
  std::vector<EdgeMask> all_edges() const;
  std::vector<std::vector<int>> edge_lists() const;

  /// Number of edges in level r that contain v.
  int degree(int r, int v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.levels_ == b.levels_;
  }

 private:
  Hypergraph(int n, std::map<int, std::vector<EdgeMask>> levels);

  int n_ = 0;
  std::map<int, std::vector<EdgeMask>> levels_;
  // Numerically sorted copy of each level for membership queries.
  std::map<int, std::vector<EdgeMask>> lookup_;
};

/// K_t^R: every r-subset of 1..t for each r in R.
Hypergraph complete(int t, const std::set<int>& types);

/// E_i^r = {A : A ∪ {i} ∈ E^r}.
NeighborhoodSet neighborhood(const Hypergraph& h, int r, int i);

/// E_ij^r = {B : B ∪ {i,j} ∈ E^r}.
NeighborhoodSet pair_neighborhood(const Hypergraph& h, int r, int i, int j);

/// E_{i\j}^r = E_i^r ∩ complement(E_j^r): sets A with j ∉ A, A∪{i} ∈ E^r
/// and A∪{j} ∉ E^r.
NeighborhoodSet difference_neighborhood(const Hypergraph& h, int r, int i,
                                        int j);

/// Size of the largest vertex set S such that, for every r in `types`, every
/// r-subset of S is an edge (vacuous when r > |S|), with one witness.
struct CompleteSubgraph {
  int order = 0;
  VertexSet witness;
};

CompleteSubgraph max_complete_subgraph_order(const Hypergraph& h,
                                             const std::set<int>& types);

/// True when every r-subset of `s` (r in `types`, r ≤ |s|) is an edge.
bool is_complete_on(const Hypergraph& h, EdgeMask s,
                    const std::set<int>& types);

inline std::size_t edge_count(const Hypergraph& h, int r) {
  return h.edge_count(r);
}

/// Calls f(mask) for every k-subset of `pool`, in lexicographic order.
template <typename F>
void for_each_subset(EdgeMask pool, int k, F&& f) {
  std::vector<int> bits;
  for (EdgeMask p = pool; p != 0; p &= p - 1) bits.push_back(__builtin_ctzll(p));
  const int m = static_cast<int>(bits.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(EdgeMask{0});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    EdgeMask s = 0;
    for (int i : idx) s |= EdgeMask{1} << bits[i];
    f(s);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace hyperlag

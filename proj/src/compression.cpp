#include "hyperlag/compression.hpp"

#include <stdexcept>
#include <string>

namespace hyperlag {

namespace {

void check_pair(int i, int j) {
  if (i >= j) {
    throw HypergraphError("compression needs i < j, got (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
  }
  if (i < 1 || j > kMaxVertices) {
    throw HypergraphError("compression pair outside the vertex range");
  }
}

std::map<int, std::size_t> level_counts(const Hypergraph& h) {
  std::map<int, std::size_t> out;
  for (const auto& [r, edges] : h.levels()) out[r] = edges.size();
  return out;
}

}  // namespace

EdgeMask compress_edge(EdgeMask e, int i, int j) {
  check_pair(i, j);
  const EdgeMask bi = vertex_bit(i);
  const EdgeMask bj = vertex_bit(j);
  if (!(e & bi) && (e & bj)) return (e & ~bj) | bi;
  return e;
}

Hypergraph compress_set(const Hypergraph& h, int i, int j) {
  check_pair(i, j);
  if (j > h.n()) {
    throw HypergraphError("compression pair outside 1.." + std::to_string(h.n()));
  }
  std::vector<EdgeMask> out;
  out.reserve(h.total_edges());
  for (EdgeMask e : h.all_edges()) {
    const EdgeMask image = compress_edge(e, i, j);
    // Keep e when its image already exists; otherwise move it.
    out.push_back(image != e && h.has_edge(image) ? e : image);
  }
  return Hypergraph::from_masks(h.n(), out);
}

bool is_left_compressed(const Hypergraph& h) {
  for (int i = 1; i <= h.n(); ++i) {
    for (int j = i + 1; j <= h.n(); ++j) {
      for (EdgeMask e : h.all_edges()) {
        const EdgeMask image = compress_edge(e, i, j);
        if (image != e && !h.has_edge(image)) return false;
      }
    }
  }
  return true;
}

CompressionResult left_compress(const Hypergraph& h) {
  CompressionResult res{h, {}};
  res.trace.initial_edge_counts = level_counts(h);
  bool changed = true;
  while (changed) {
    changed = false;
    ++res.trace.sweeps;
    for (int i = 1; i <= h.n(); ++i) {
      for (int j = i + 1; j <= h.n(); ++j) {
        Hypergraph next = compress_set(res.graph, i, j);
        if (!(next == res.graph)) {
          res.graph = std::move(next);
          res.trace.steps.emplace_back(i, j);
          changed = true;
        }
      }
    }
  }
  res.trace.final_edge_counts = level_counts(res.graph);
  return res;
}

}  // namespace hyperlag

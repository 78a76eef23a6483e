#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

/// L_ij(e): replace j by i when i ∉ e and j ∈ e; otherwise e. Requires i < j.
EdgeMask compress_edge(EdgeMask e, int i, int j);

/// 𝓛_ij applied to every level: images of L_ij, plus the edges whose image
/// was already present. Per-level edge counts are unchanged.
Hypergraph compress_set(const Hypergraph& h, int i, int j);

struct CompressionTrace {
  std::vector<std::pair<int, int>> steps;  // only steps that changed the set
  std::map<int, std::size_t> initial_edge_counts;
  std::map<int, std::size_t> final_edge_counts;
  int sweeps = 0;
};

struct CompressionResult {
  Hypergraph graph;
  CompressionTrace trace;
};

/// Lexicographic sweeps over (i, j), i < j, until a full sweep is a no-op.
CompressionResult left_compress(const Hypergraph& h);

bool is_left_compressed(const Hypergraph& h);

}  // namespace hyperlag

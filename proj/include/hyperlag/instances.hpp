#pragma once

#include <random>
#include <set>

#include "hyperlag/hypergraph.hpp"

// Seeded random hypergraphs, including families that satisfy each theorem's
// hypotheses by construction. Vertices are randomly relabeled so that the
// special structure does not always sit on 1..t.
namespace hyperlag::instances {

using Rng = std::mt19937_64;

/// Each r-subset of 1..n is an edge with probability p, for every r in
/// `types`; a level that comes out empty receives one random edge.
Hypergraph random_hypergraph(Rng& rng, int n, const std::set<int>& types, double p);

/// Random 2-graph with at least one edge.
Hypergraph random_graph(Rng& rng, int n, double p);

/// {1,r}-graph: 1-edges exactly on a t-set T, T^(r) complete, plus random
/// extra r-edges on n vertices.
Hypergraph onr_instance(Rng& rng, int r, int t, int n, double p);

/// {1,3}-graph: a 3-clique S of order s containing T (|T| = t) with 1-edges
/// exactly on T, plus up to C(t-1,2) extra 3-edges outside S^(3).
Hypergraph on13_instance(Rng& rng, int t, int s, int n);

/// {1,2,3}-graph: 1-edges exactly on T (|T| = t), T^(2) and T^(3) complete,
/// plus random extra 2- and 3-edges.
Hypergraph on123_instance(Rng& rng, int t, int n, double p);

/// {1,2}-graph: K_t^{1,2} on T plus random 2-edges and possibly extra
/// 1-edges, kept only when the maximum complete {1,2}-subgraph is t.
Hypergraph peng12_instance(Rng& rng, int t, int n, double p);

/// 3-graph: [t]^(3) plus up to C(t-1,2) extra edges.
Hypergraph peng3_instance(Rng& rng, int t, int n);

}  // namespace hyperlag::instances

#pragma once

#include "hyper/generate.hpp"
#include "hyper/hypergraph.hpp"

namespace test_support {

/// Five vertices 1..5 in four overlapping groups. Known counts: 5 vertices,
/// 4 hyperedges, max degree 3, max cardinality 4, 11 bipartite edges,
/// 8 clique edges.
inline hyper::Hypergraph sample_hypergraph() {
  hyper::HypergraphBuilder b;
  b.add_hyperedge({1, 2});
  b.add_hyperedge({1, 2, 3, 4});
  b.add_hyperedge({1, 4, 5});
  b.add_hyperedge({3, 4});
  return b.build();
}

/// Same text as sample_hypergraph in file form.
inline const char* sample_hypergraph_text() {
  return "1 2\n1 2 3 4\n1 4 5\n3 4\n";
}

/// Small random hypergraph for property tests; distinct seeds give distinct
/// shapes, including isolated vertices when sampling leaves gaps.
inline hyper::Hypergraph random_hypergraph(uint64_t seed, uint64_t num_vertices = 12,
                                           uint64_t num_hyperedges = 10,
                                           uint32_t max_cardinality = 4) {
  hyper::GeneratorConfig cfg;
  cfg.num_vertices = num_vertices;
  cfg.num_hyperedges = num_hyperedges;
  cfg.min_cardinality = 1;
  cfg.max_cardinality = max_cardinality;
  cfg.seed = seed;
  return hyper::generate_hypergraph(cfg).graph;
}

}  // namespace test_support

#pragma once

#include <cstdint>

#include "hyper/hypergraph.hpp"

namespace hyper {

/// Synthetic workload: `num_hyperedges` hyperedges whose cardinalities are
/// drawn uniformly from [min_cardinality, max_cardinality], each with that
/// many distinct member vertices drawn uniformly from [0, num_vertices).
/// Every vertex id below num_vertices exists in the output even when nothing
/// samples it. The same seed reproduces the same graph on any platform; the
/// generator uses its own bounded-draw arithmetic instead of distribution
/// classes whose output differs across standard libraries.
struct GeneratorConfig {
  uint64_t num_vertices = 0;
  uint64_t num_hyperedges = 0;
  uint32_t min_cardinality = 1;
  uint32_t max_cardinality = 1;
  double weight_min = 1.0;
  double weight_max = 1.0;
  uint64_t seed = 0;
};

struct GeneratedHypergraph {
  Hypergraph graph;
  uint32_t realized_max_degree = 0;
  uint32_t realized_max_cardinality = 0;
};

/// Throws ConfigError when num_vertices is 0, the cardinality interval is
/// empty or exceeds num_vertices, or weight_min > weight_max.
GeneratedHypergraph generate_hypergraph(const GeneratorConfig& cfg);

}  // namespace hyper

#include "hyper/generate.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "hyper/error.hpp"

namespace hyper {

namespace {

/// Bounded draw with the classic modulo fold. The slight bias is irrelevant
/// for workload synthesis and keeps results identical across platforms.
uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

GeneratedHypergraph generate_hypergraph(const GeneratorConfig& cfg) {
  if (cfg.num_vertices == 0) throw ConfigError("generator needs at least one vertex");
  if (cfg.min_cardinality < 1 || cfg.min_cardinality > cfg.max_cardinality) {
    throw ConfigError(detail::cat("bad cardinality interval [", cfg.min_cardinality, ", ",
                                  cfg.max_cardinality, "]"));
  }
  if (cfg.max_cardinality > cfg.num_vertices) {
    throw ConfigError(detail::cat("max cardinality ", cfg.max_cardinality, " exceeds the ",
                                  cfg.num_vertices, " available vertices"));
  }
  if (cfg.weight_min > cfg.weight_max || cfg.weight_min < 0.0) {
    throw ConfigError(detail::cat("bad weight interval [", cfg.weight_min, ", ", cfg.weight_max,
                                  "]"));
  }

  std::mt19937_64 rng(cfg.seed);
  HypergraphBuilder builder;

  std::vector<uint64_t> members;
  std::unordered_set<uint64_t> taken;
  std::vector<uint64_t> all_ids;  // lazily filled when dense sampling pays off
  for (uint64_t e = 0; e < cfg.num_hyperedges; ++e) {
    uint32_t card = cfg.min_cardinality;
    if (cfg.max_cardinality > cfg.min_cardinality) {
      card += static_cast<uint32_t>(
          draw(rng, cfg.max_cardinality - cfg.min_cardinality + uint64_t{1}));
    }
    members.clear();
    if (uint64_t{card} * 4 <= cfg.num_vertices) {
      // Sparse: rejection sampling terminates quickly.
      taken.clear();
      while (members.size() < card) {
        uint64_t v = draw(rng, cfg.num_vertices);
        if (taken.insert(v).second) members.push_back(v);
      }
    } else {
      // Dense: partial shuffle of the full id range.
      if (all_ids.empty()) {
        all_ids.resize(cfg.num_vertices);
        for (uint64_t i = 0; i < cfg.num_vertices; ++i) all_ids[i] = i;
      }
      // Partial Fisher-Yates; the array stays a permutation for the next edge.
      for (uint32_t i = 0; i < card; ++i) {
        uint64_t j = i + draw(rng, cfg.num_vertices - i);
        std::swap(all_ids[i], all_ids[j]);
        members.push_back(all_ids[i]);
      }
    }

    double weight = cfg.weight_min;
    if (cfg.weight_max > cfg.weight_min) {
      weight += draw_unit(rng) * (cfg.weight_max - cfg.weight_min);
    }
    builder.add_hyperedge(std::span<const uint64_t>(members), weight);
  }
  for (uint64_t v = 0; v < cfg.num_vertices; ++v) builder.add_vertex(VertexId{v});

  GeneratedHypergraph out;
  out.graph = builder.build();
  out.realized_max_degree = out.graph.max_degree();
  out.realized_max_cardinality = out.graph.max_cardinality();
  return out;
}

}  // namespace hyper

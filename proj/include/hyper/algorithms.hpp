#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hyper/engine.hpp"
#include "hyper/hypergraph.hpp"
#include "hyper/partition.hpp"
#include "hyper/report.hpp"

namespace hyper {

inline constexpr double kInfiniteHop = std::numeric_limits<double>::infinity();

struct PageRankConfig {
  /// Restart probability; must lie strictly between 0 and 1.
  double alpha = 0.15;
  uint32_t iterations = 30;
};

struct PageRankResult {
  std::vector<double> vertex_rank;     // by vertex index
  std::vector<double> hyperedge_rank;  // by hyperedge index
  /// Degree-zero vertices take no part in the recurrence; their rank stays
  /// at the initial 1.0 and they are counted here instead of failing the run.
  size_t excluded_vertices = 0;
  RunReport report;
};

/// Rank diffusion over the bipartite structure. Vertices alternate with
/// hyperedges: a vertex refreshes its rank from the weighted rank mass of its
/// hyperedges and hands back rank normalized by the total incident weight; a
/// hyperedge scales the gathered mass by its own weight and spreads it evenly
/// over its members. Ranks are intentionally left unnormalized.
/// Throws ConfigError for alpha outside (0,1) or a non-positive hyperedge
/// weight.
PageRankResult page_rank(const Hypergraph& h, const PartitionAssignment& a,
                         const PageRankConfig& cfg, unsigned threads = 1);

struct PageRankEntropyResult {
  std::vector<double> vertex_rank;
  std::vector<double> hyperedge_rank;
  /// Shannon entropy (bits) of each hyperedge's normalized member-rank
  /// distribution: 0 when one member holds all mass, log2(cardinality) when
  /// the mass is uniform.
  std::vector<double> hyperedge_entropy;
  size_t excluded_vertices = 0;
  RunReport report;
};

/// page_rank plus a per-hyperedge entropy of member rank concentration,
/// computed from the full member rank list each round. Ranks match
/// page_rank's output on the same inputs.
PageRankEntropyResult page_rank_entropy(const Hypergraph& h, const PartitionAssignment& a,
                                        const PageRankConfig& cfg, unsigned threads = 1);

/// Entropy (bits) of the distribution obtained by normalizing `mass`.
/// All-zero input yields 0. Negative entries are a ConfigError.
double rank_entropy_bits(std::span<const double> mass);

struct LabelPropagationResult {
  std::vector<uint64_t> vertex_label;     // by vertex index
  std::vector<uint64_t> hyperedge_label;  // by hyperedge index
  RunReport report;
};

/// Connected-component labels via max-id flooding: every vertex starts from
/// its own id, and both sides repeatedly adopt the largest label heard from
/// their neighborhood. Nodes only re-broadcast when their label grew, so the
/// run quiesces once labels stabilize. At the fixed point every node of a
/// connected component carries the component's largest vertex id.
LabelPropagationResult label_propagation(const Hypergraph& h, const PartitionAssignment& a,
                                         uint32_t max_iters = 30, unsigned threads = 1);

struct ShortestPathsResult {
  std::vector<double> vertex_hops;     // by vertex index; kInfiniteHop if unreachable
  std::vector<double> hyperedge_hops;  // by hyperedge index
  RunReport report;
};

/// Unweighted multi-source shortest paths in hops. A vertex's hop counts the
/// hyperedge steps from the nearest source (sources are 0); a hyperedge's hop
/// is 1 + the hop of the member that reached it first. Improvements alone
/// propagate, so the run quiesces at the graph's diameter.
/// Throws ConfigError when `sources` is empty and LookupError when a source
/// names an unknown vertex.
ShortestPathsResult shortest_paths(const Hypergraph& h, const PartitionAssignment& a,
                                   std::span<const VertexId> sources, uint32_t max_iters = 30,
                                   unsigned threads = 1);

}  // namespace hyper

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyper/hypergraph.hpp"

namespace hyper {

/// Fixed odd multiplier for the placement hash. Multiplying by an odd
/// constant permutes the 2^64 ring, so the reduction mod k spreads ids while
/// staying reproducible across runs and machines.
inline constexpr uint64_t kHashMultiplier = 1125899906842597ull;

struct PartitionConfig {
  uint32_t num_parts = 1;
  /// Hybrid strategies split nodes whose size exceeds this bound.
  uint32_t degree_cutoff = 100;
  uint64_t hash_multiplier = kHashMultiplier;
  /// Reserved for randomized tie-breaking; the shipped strategies are fully
  /// deterministic and ignore it.
  uint64_t seed = 0;
};

/// Placement hash: raw id -> partition in [0, k).
inline uint32_t part_hash(uint64_t raw, uint64_t multiplier, uint32_t k) {
  return static_cast<uint32_t>((raw * multiplier) % k);
}

/// Which side of each bipartite edge gets cut (replicated).
enum class CutMode {
  VertexCut,     // edges grouped by hyperedge; vertices replicate
  HyperedgeCut,  // edges grouped by vertex; hyperedges replicate
  BothCut,       // edges placed independently; both sides replicate
};

/// An edge partitioning plus the derived master/mirror placement.
///
/// mirrors(n) is the set of partitions holding at least one edge incident to
/// n, ascending. The master is the mirror with the most incident edges (ties
/// to the lowest partition id). A node with no incident edges has no mirrors
/// and is mastered at part_hash(raw id).
class PartitionAssignment {
 public:
  PartitionAssignment() = default;

  /// Derives masters and mirrors from a per-edge partition vector laid out in
  /// the hypergraph's canonical edge order. Throws ConfigError when sizes or
  /// partition ids are out of range.
  static PartitionAssignment from_edge_parts(const Hypergraph& h, std::vector<uint32_t> edge_parts,
                                             const PartitionConfig& cfg);

  uint32_t num_parts() const { return num_parts_; }
  std::span<const uint32_t> edge_parts() const { return edge_parts_; }
  uint32_t part_of_edge(size_t edge_index) const { return edge_parts_[edge_index]; }

  uint32_t vertex_master(uint32_t vidx) const { return vertex_master_[vidx]; }
  uint32_t hyperedge_master(uint32_t eidx) const { return hyperedge_master_[eidx]; }
  std::span<const uint32_t> vertex_mirrors(uint32_t vidx) const {
    return {vertex_mirrors_.data() + vertex_mirror_offsets_[vidx],
            vertex_mirrors_.data() + vertex_mirror_offsets_[vidx + 1]};
  }
  std::span<const uint32_t> hyperedge_mirrors(uint32_t eidx) const {
    return {hyperedge_mirrors_.data() + hyperedge_mirror_offsets_[eidx],
            hyperedge_mirrors_.data() + hyperedge_mirror_offsets_[eidx + 1]};
  }

  size_t source_vertices() const { return vertex_master_.size(); }
  size_t source_hyperedges() const { return hyperedge_master_.size(); }
  /// True when this assignment was derived from a graph of matching shape.
  bool covers(const Hypergraph& h) const {
    return vertex_master_.size() == h.num_vertices() &&
           hyperedge_master_.size() == h.num_hyperedges() &&
           edge_parts_.size() == h.num_bipartite_edges();
  }

 private:
  uint32_t num_parts_ = 1;
  std::vector<uint32_t> edge_parts_;
  std::vector<uint32_t> vertex_master_;
  std::vector<uint32_t> hyperedge_master_;
  std::vector<size_t> vertex_mirror_offsets_;
  std::vector<uint32_t> vertex_mirrors_;
  std::vector<size_t> hyperedge_mirror_offsets_;
  std::vector<uint32_t> hyperedge_mirrors_;
};

/// Pure hash placement. VertexCut hashes the hyperedge id, HyperedgeCut the
/// vertex id, BothCut a mix of both endpoints.
PartitionAssignment random_cut(const Hypergraph& h, const PartitionConfig& cfg, CutMode mode);

/// Hash placement that switches the hashed endpoint for high-size nodes:
/// VertexCut scatters hyperedges with cardinality > cutoff by member vertex,
/// HyperedgeCut scatters vertices with degree > cutoff by hyperedge.
/// BothCut is not defined for hybrid placement (ConfigError).
PartitionAssignment hybrid_cut(const Hypergraph& h, const PartitionConfig& cfg, CutMode mode);

/// Sequential greedy placement over the driven side in ascending id order.
/// Each group of edges goes to argmax over partitions of
///   overlap(group, p) - sqrt(load(p))
/// where overlap counts group members whose hash home or an already-placed
/// replica falls on p, and load is the number of edges already assigned.
/// Ties break to the lowest partition id. BothCut is not defined (ConfigError).
PartitionAssignment greedy_cut(const Hypergraph& h, const PartitionConfig& cfg, CutMode mode);

enum class StrategyFamily { Random, Hybrid, Greedy };

struct Strategy {
  StrategyFamily family;
  CutMode mode;
};

/// Short names accepted on the command line: rvc, rhec, rbc, hvc, hhec, gvc,
/// ghec. Returns nullopt for anything else.
std::optional<Strategy> parse_strategy(const std::string& name);
std::string strategy_name(Strategy s);
std::vector<std::string> all_strategy_names();

PartitionAssignment run_strategy(const Hypergraph& h, const PartitionConfig& cfg, Strategy s);

struct PartitionStats {
  double replication_factor_vertices = 0.0;
  double replication_factor_hyperedges = 0.0;
  /// max partition edge count over the ideal even share; 1.0 is perfect.
  double edge_balance = 0.0;
  std::vector<size_t> per_partition_edges;
};

PartitionStats partition_stats(const Hypergraph& h, const PartitionAssignment& a);

}  // namespace hyper

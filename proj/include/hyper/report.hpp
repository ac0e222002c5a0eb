#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace hyper {

/// Counters for one full round (vertex phase, then hyperedge phase).
struct RoundStats {
  uint32_t round = 0;

  /// Nodes whose procedure ran this round.
  size_t active_vertices = 0;
  size_t active_hyperedges = 0;

  /// Vertex phase: messages materialized on edge partitions, distinct
  /// hyperedge destinations after combining, and (partition, destination)
  /// batches that crossed to a remote master.
  size_t to_hyperedge_emitted = 0;
  size_t to_hyperedge_combined = 0;
  size_t to_hyperedge_shipped = 0;

  /// Hyperedge phase, symmetric to the above.
  size_t to_vertex_emitted = 0;
  size_t to_vertex_combined = 0;
  size_t to_vertex_shipped = 0;

  /// Replica refreshes pushed to partitions other than the node's master.
  size_t vertex_mirror_syncs = 0;
  size_t hyperedge_mirror_syncs = 0;

  double millis = 0.0;
};

struct RunReport {
  std::vector<RoundStats> rounds;
  /// True when a phase produced zero messages before the iteration bound.
  bool quiesced = false;

  size_t total_emitted = 0;
  size_t total_combined = 0;
  size_t total_shipped = 0;
  size_t total_mirror_syncs = 0;
  double execute_millis = 0.0;

  uint32_t rounds_executed() const { return static_cast<uint32_t>(rounds.size()); }

  void add(const RoundStats& r) {
    rounds.push_back(r);
    total_emitted += r.to_hyperedge_emitted + r.to_vertex_emitted;
    total_combined += r.to_hyperedge_combined + r.to_vertex_combined;
    total_shipped += r.to_hyperedge_shipped + r.to_vertex_shipped;
    total_mirror_syncs += r.vertex_mirror_syncs + r.hyperedge_mirror_syncs;
  }
};

std::string to_json_string(const RunReport& report, int indent = 2);

}  // namespace hyper

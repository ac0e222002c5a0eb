#include "hyper/engine.hpp"

#include <algorithm>

namespace hyper::detail {

namespace {

/// Local slot of a global index within a partition's sorted node list.
uint32_t slot_of(const std::vector<uint32_t>& nodes, uint32_t global) {
  return static_cast<uint32_t>(
      std::lower_bound(nodes.begin(), nodes.end(), global) - nodes.begin());
}

void build_side(ExecutionPlan::Side& side, size_t num_nodes, uint32_t k,
                const std::vector<std::vector<uint32_t>>& present_per_part,
                const std::function<uint32_t(uint32_t)>& master_of,
                const std::function<std::span<const uint32_t>(uint32_t)>& mirrors_of) {
  side.nodes.assign(k, {});
  for (uint32_t p = 0; p < k; ++p) {
    side.nodes[p] = present_per_part[p];
    std::sort(side.nodes[p].begin(), side.nodes[p].end());
    side.nodes[p].erase(std::unique(side.nodes[p].begin(), side.nodes[p].end()),
                        side.nodes[p].end());
  }
  side.masters.assign(k, {});
  side.master_part.resize(num_nodes);
  for (uint32_t g = 0; g < num_nodes; ++g) {
    side.master_part[g] = master_of(g);
    side.masters[side.master_part[g]].push_back(g);
  }

  side.replica_offsets.assign(num_nodes + 1, 0);
  for (uint32_t g = 0; g < num_nodes; ++g) {
    side.replica_offsets[g + 1] = side.replica_offsets[g] + mirrors_of(g).size();
  }
  side.replicas.resize(side.replica_offsets[num_nodes]);
  for (uint32_t g = 0; g < num_nodes; ++g) {
    size_t at = side.replica_offsets[g];
    for (uint32_t p : mirrors_of(g)) {
      side.replicas[at++] = {p, slot_of(side.nodes[p], g)};
    }
  }
}

}  // namespace

ExecutionPlan build_execution_plan(const Hypergraph& h, const PartitionAssignment& a) {
  ExecutionPlan plan;
  plan.num_parts = a.num_parts();
  const uint32_t k = plan.num_parts;

  std::vector<std::vector<uint32_t>> vertices_on(k);
  std::vector<std::vector<uint32_t>> hyperedges_on(k);
  for (size_t i = 0; i < h.num_bipartite_edges(); ++i) {
    uint32_t p = a.part_of_edge(i);
    vertices_on[p].push_back(h.edge_source(i));
    hyperedges_on[p].push_back(h.edge_target(i));
  }

  build_side(plan.vertices, h.num_vertices(), k, vertices_on,
             [&](uint32_t g) { return a.vertex_master(g); },
             [&](uint32_t g) { return a.vertex_mirrors(g); });
  build_side(plan.hyperedges, h.num_hyperedges(), k, hyperedges_on,
             [&](uint32_t g) { return a.hyperedge_master(g); },
             [&](uint32_t g) { return a.hyperedge_mirrors(g); });

  plan.edges.assign(k, {});
  for (size_t i = 0; i < h.num_bipartite_edges(); ++i) {
    uint32_t p = a.part_of_edge(i);
    plan.edges[p].emplace_back(slot_of(plan.vertices.nodes[p], h.edge_source(i)),
                               slot_of(plan.hyperedges.nodes[p], h.edge_target(i)));
  }

  return plan;
}

}  // namespace hyper::detail

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyper/error.hpp"
#include "hyper/ids.hpp"

namespace hyper {

/// One edge of the bipartite representation. Edges run exclusively from a
/// member vertex to the hyperedge that contains it.
struct BipartiteEdge {
  VertexId src;
  HyperedgeId dst;
  auto operator<=>(const BipartiteEdge&) const = default;
};

class HypergraphBuilder;

/// Immutable hypergraph structure: vertices, weighted hyperedges, and the
/// bipartite incidence between them.
///
/// Dense indices: both sides are numbered 0..n-1 in ascending external-id
/// order, so index order and id order agree everywhere. The canonical
/// bipartite edge enumeration is hyperedge-major: all member edges of
/// hyperedge index 0 (in stored member order), then hyperedge index 1, ...
/// Every per-edge array in the library (partition assignments in particular)
/// is laid out in this order.
class Hypergraph {
 public:
  Hypergraph() = default;

  // ---- sizes ----
  size_t num_vertices() const { return vertex_ids_.size(); }
  size_t num_hyperedges() const { return hyperedge_ids_.size(); }
  size_t num_bipartite_edges() const { return members_.size(); }
  uint32_t max_degree() const { return max_degree_; }
  uint32_t max_cardinality() const { return max_cardinality_; }
  /// Number of repeated members dropped while building (per-hyperedge dedup).
  size_t duplicate_member_count() const { return duplicate_members_; }

  // ---- id <-> dense index ----
  bool has_vertex(VertexId v) const { return vertex_lookup_.count(v.raw) != 0; }
  bool has_hyperedge(HyperedgeId e) const { return hyperedge_lookup_.count(e.raw) != 0; }
  uint32_t vertex_index(VertexId v) const;
  uint32_t hyperedge_index(HyperedgeId e) const;
  VertexId vertex_id(uint32_t idx) const { return VertexId{vertex_ids_[idx]}; }
  HyperedgeId hyperedge_id(uint32_t idx) const { return HyperedgeId{hyperedge_ids_[idx]}; }

  // ---- per-node queries (index form; id form validates and forwards) ----
  uint32_t degree_at(uint32_t vidx) const {
    return static_cast<uint32_t>(incidence_offsets_[vidx + 1] - incidence_offsets_[vidx]);
  }
  uint32_t cardinality_at(uint32_t eidx) const {
    return static_cast<uint32_t>(member_offsets_[eidx + 1] - member_offsets_[eidx]);
  }
  double weight_at(uint32_t eidx) const { return weights_[eidx]; }

  uint32_t degree(VertexId v) const { return degree_at(vertex_index(v)); }
  uint32_t cardinality(HyperedgeId e) const { return cardinality_at(hyperedge_index(e)); }
  double weight(HyperedgeId e) const { return weights_[hyperedge_index(e)]; }

  /// Member vertex indices of a hyperedge, in stored (input) order.
  std::span<const uint32_t> members_at(uint32_t eidx) const {
    return {members_.data() + member_offsets_[eidx],
            members_.data() + member_offsets_[eidx + 1]};
  }
  /// Incident hyperedge indices of a vertex, ascending.
  std::span<const uint32_t> incident_at(uint32_t vidx) const {
    return {incidence_.data() + incidence_offsets_[vidx],
            incidence_.data() + incidence_offsets_[vidx + 1]};
  }

  std::vector<VertexId> members(HyperedgeId e) const;
  std::vector<HyperedgeId> incident(VertexId v) const;

  // ---- canonical bipartite edges ----
  /// Source vertex index of canonical edge i.
  uint32_t edge_source(size_t i) const { return members_[i]; }
  /// Destination hyperedge index of canonical edge i.
  uint32_t edge_target(size_t i) const { return edge_dst_[i]; }
  /// Canonical edge index range [first, last) of a hyperedge.
  std::pair<size_t, size_t> edge_range(uint32_t eidx) const {
    return {member_offsets_[eidx], member_offsets_[eidx + 1]};
  }
  /// Materialized edge list in canonical order.
  std::vector<BipartiteEdge> bipartite_edges() const;

  friend class HypergraphBuilder;

 private:
  std::vector<uint64_t> vertex_ids_;     // ascending
  std::vector<uint64_t> hyperedge_ids_;  // ascending
  std::unordered_map<uint64_t, uint32_t> vertex_lookup_;
  std::unordered_map<uint64_t, uint32_t> hyperedge_lookup_;

  std::vector<double> weights_;          // per hyperedge index
  std::vector<size_t> member_offsets_;   // size nhe+1
  std::vector<uint32_t> members_;        // vertex indices, input order per hyperedge
  std::vector<uint32_t> edge_dst_;       // hyperedge index per canonical edge
  std::vector<size_t> incidence_offsets_;  // size nv+1
  std::vector<uint32_t> incidence_;        // hyperedge indices per vertex, ascending

  uint32_t max_degree_ = 0;
  uint32_t max_cardinality_ = 0;
  size_t duplicate_members_ = 0;
};

/// Accumulates hyperedges (and optional isolated vertices), then builds the
/// immutable structure. Hyperedges without an explicit id are numbered
/// sequentially from 0 in insertion order.
class HypergraphBuilder {
 public:
  HypergraphBuilder& add_hyperedge(std::span<const uint64_t> member_ids, double weight = 1.0);
  HypergraphBuilder& add_hyperedge(std::initializer_list<uint64_t> member_ids, double weight = 1.0) {
    return add_hyperedge(std::span<const uint64_t>(member_ids.begin(), member_ids.size()), weight);
  }
  HypergraphBuilder& add_hyperedge(HyperedgeId id, std::span<const uint64_t> member_ids,
                                   double weight = 1.0);
  /// Registers a vertex even if no hyperedge contains it.
  HypergraphBuilder& add_vertex(VertexId v);

  size_t pending_hyperedges() const { return edges_.size(); }

  /// Validates and assembles. Throws ValidationError on: empty member list,
  /// duplicate hyperedge id, raw id above 2^63-1, or negative weight.
  Hypergraph build() const;

 private:
  struct PendingEdge {
    uint64_t id;
    std::vector<uint64_t> members;
    double weight;
  };
  std::vector<PendingEdge> edges_;
  std::vector<uint64_t> extra_vertices_;
  uint64_t next_auto_id_ = 0;
};

}  // namespace hyper

#include "hyper/hypergraph.hpp"

#include <algorithm>
#include <limits>

namespace hyper {

uint32_t Hypergraph::vertex_index(VertexId v) const {
  auto it = vertex_lookup_.find(v.raw);
  if (it == vertex_lookup_.end()) {
    throw LookupError(detail::cat("unknown vertex id ", v.raw));
  }
  return it->second;
}

uint32_t Hypergraph::hyperedge_index(HyperedgeId e) const {
  auto it = hyperedge_lookup_.find(e.raw);
  if (it == hyperedge_lookup_.end()) {
    throw LookupError(detail::cat("unknown hyperedge id ", e.raw));
  }
  return it->second;
}

std::vector<VertexId> Hypergraph::members(HyperedgeId e) const {
  auto row = members_at(hyperedge_index(e));
  std::vector<VertexId> out;
  out.reserve(row.size());
  for (uint32_t vidx : row) out.push_back(vertex_id(vidx));
  return out;
}

std::vector<HyperedgeId> Hypergraph::incident(VertexId v) const {
  auto row = incident_at(vertex_index(v));
  std::vector<HyperedgeId> out;
  out.reserve(row.size());
  for (uint32_t eidx : row) out.push_back(hyperedge_id(eidx));
  return out;
}

std::vector<BipartiteEdge> Hypergraph::bipartite_edges() const {
  std::vector<BipartiteEdge> out;
  out.reserve(members_.size());
  for (size_t i = 0; i < members_.size(); ++i) {
    out.push_back({vertex_id(members_[i]), hyperedge_id(edge_dst_[i])});
  }
  return out;
}

HypergraphBuilder& HypergraphBuilder::add_hyperedge(std::span<const uint64_t> member_ids,
                                                    double weight) {
  edges_.push_back({next_auto_id_++,
                    std::vector<uint64_t>(member_ids.begin(), member_ids.end()), weight});
  return *this;
}

HypergraphBuilder& HypergraphBuilder::add_hyperedge(HyperedgeId id,
                                                    std::span<const uint64_t> member_ids,
                                                    double weight) {
  edges_.push_back({id.raw, std::vector<uint64_t>(member_ids.begin(), member_ids.end()), weight});
  if (id.raw >= next_auto_id_ && id.raw < kMaxRawId) next_auto_id_ = id.raw + 1;
  return *this;
}

HypergraphBuilder& HypergraphBuilder::add_vertex(VertexId v) {
  extra_vertices_.push_back(v.raw);
  return *this;
}

Hypergraph HypergraphBuilder::build() const {
  Hypergraph h;

  for (size_t i = 0; i < edges_.size(); ++i) {
    const PendingEdge& e = edges_[i];
    if (e.members.empty()) {
      throw ValidationError(detail::cat("hyperedge at position ", i, " (id ", e.id,
                                        ") has no members"));
    }
    if (e.id > kMaxRawId) {
      throw ValidationError(detail::cat("hyperedge id ", e.id, " exceeds the 2^63-1 bound"));
    }
    if (!(e.weight >= 0.0)) {
      throw ValidationError(detail::cat("hyperedge ", e.id, " has negative weight ", e.weight));
    }
    for (uint64_t m : e.members) {
      if (m > kMaxRawId) {
        throw ValidationError(detail::cat("vertex id ", m, " exceeds the 2^63-1 bound"));
      }
    }
  }
  for (uint64_t v : extra_vertices_) {
    if (v > kMaxRawId) {
      throw ValidationError(detail::cat("vertex id ", v, " exceeds the 2^63-1 bound"));
    }
  }

  // Hyperedge indices follow ascending external id.
  std::vector<uint32_t> order(edges_.size());
  for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](uint32_t a, uint32_t b) { return edges_[a].id < edges_[b].id; });
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    if (edges_[order[i]].id == edges_[order[i + 1]].id) {
      throw ValidationError(detail::cat("duplicate hyperedge id ", edges_[order[i]].id));
    }
  }

  // Vertex universe: all members plus explicitly added vertices, ascending.
  h.vertex_ids_ = extra_vertices_;
  for (const PendingEdge& e : edges_) {
    h.vertex_ids_.insert(h.vertex_ids_.end(), e.members.begin(), e.members.end());
  }
  std::sort(h.vertex_ids_.begin(), h.vertex_ids_.end());
  h.vertex_ids_.erase(std::unique(h.vertex_ids_.begin(), h.vertex_ids_.end()),
                      h.vertex_ids_.end());
  if (h.vertex_ids_.size() > std::numeric_limits<uint32_t>::max() ||
      edges_.size() > std::numeric_limits<uint32_t>::max()) {
    throw ValidationError("hypergraph exceeds 2^32-1 nodes per side");
  }
  h.vertex_lookup_.reserve(h.vertex_ids_.size());
  for (uint32_t i = 0; i < h.vertex_ids_.size(); ++i) h.vertex_lookup_[h.vertex_ids_[i]] = i;

  h.hyperedge_ids_.reserve(edges_.size());
  for (uint32_t i : order) h.hyperedge_ids_.push_back(edges_[i].id);
  h.hyperedge_lookup_.reserve(h.hyperedge_ids_.size());
  for (uint32_t i = 0; i < h.hyperedge_ids_.size(); ++i) {
    h.hyperedge_lookup_[h.hyperedge_ids_[i]] = i;
  }

  // Member rows with per-hyperedge dedup (first occurrence kept, order kept).
  h.weights_.reserve(edges_.size());
  h.member_offsets_.reserve(edges_.size() + 1);
  h.member_offsets_.push_back(0);
  std::vector<uint32_t> scratch;
  for (uint32_t src : order) {
    const PendingEdge& e = edges_[src];
    scratch.clear();
    for (uint64_t m : e.members) {
      uint32_t vidx = h.vertex_lookup_.at(m);
      if (std::find(scratch.begin(), scratch.end(), vidx) != scratch.end()) {
        ++h.duplicate_members_;
        continue;
      }
      scratch.push_back(vidx);
    }
    uint32_t eidx = static_cast<uint32_t>(h.weights_.size());
    h.weights_.push_back(e.weight);
    h.members_.insert(h.members_.end(), scratch.begin(), scratch.end());
    h.edge_dst_.insert(h.edge_dst_.end(), scratch.size(), eidx);
    h.member_offsets_.push_back(h.members_.size());
    h.max_cardinality_ = std::max(h.max_cardinality_, static_cast<uint32_t>(scratch.size()));
  }

  // Vertex -> hyperedge incidence. Filling in ascending hyperedge index keeps
  // every row ascending without a sort.
  h.incidence_offsets_.assign(h.vertex_ids_.size() + 1, 0);
  for (uint32_t vidx : h.members_) ++h.incidence_offsets_[vidx + 1];
  for (size_t v = 0; v < h.vertex_ids_.size(); ++v) {
    h.incidence_offsets_[v + 1] += h.incidence_offsets_[v];
  }
  h.incidence_.resize(h.members_.size());
  std::vector<size_t> cursor(h.incidence_offsets_.begin(), h.incidence_offsets_.end() - 1);
  for (size_t i = 0; i < h.members_.size(); ++i) {
    h.incidence_[cursor[h.members_[i]]++] = h.edge_dst_[i];
  }
  for (uint32_t v = 0; v < h.vertex_ids_.size(); ++v) {
    h.max_degree_ = std::max(h.max_degree_, h.degree_at(v));
  }

  return h;
}

}  // namespace hyper

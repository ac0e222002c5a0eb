#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyper/hypergraph.hpp"

namespace hyper {

/// One hyperedge shared by the endpoints of a clique edge.
struct CoMembership {
  HyperedgeId id;
  double weight;
};

/// Clique expansion of a hypergraph: every pair of vertices that share at
/// least one hyperedge becomes a single undirected edge (a.raw < b.raw).
/// Parallel pairs arising from multiple shared hyperedges are collapsed by
/// the merge function that produced each edge's attribute.
template <typename ED>
struct CliqueGraph {
  struct Edge {
    VertexId a, b;
    ED attr;
  };
  std::vector<VertexId> vertices;  // all source vertices, ascending
  std::vector<Edge> edges;         // sorted by (a, b)
};

namespace detail {

/// Groups co-member pairs: key = packed (min idx, max idx), value = list of
/// shared hyperedge indices in ascending hyperedge order.
std::vector<std::pair<uint64_t, std::vector<uint32_t>>> collect_clique_pairs(const Hypergraph& h);

}  // namespace detail

/// Builds the clique expansion. `merge` receives every shared hyperedge of a
/// pair (ascending hyperedge id) and returns the edge attribute.
template <typename Merge>
auto to_clique_graph(const Hypergraph& h, Merge&& merge)
    -> CliqueGraph<std::invoke_result_t<Merge&, std::span<const CoMembership>>> {
  using ED = std::invoke_result_t<Merge&, std::span<const CoMembership>>;
  CliqueGraph<ED> g;
  g.vertices.reserve(h.num_vertices());
  for (uint32_t v = 0; v < h.num_vertices(); ++v) g.vertices.push_back(h.vertex_id(v));

  std::vector<CoMembership> shared;
  for (auto& [key, hes] : detail::collect_clique_pairs(h)) {
    shared.clear();
    for (uint32_t eidx : hes) shared.push_back({h.hyperedge_id(eidx), h.weight_at(eidx)});
    uint32_t a = static_cast<uint32_t>(key >> 32);
    uint32_t b = static_cast<uint32_t>(key & 0xffffffffu);
    g.edges.push_back({h.vertex_id(a), h.vertex_id(b), merge(std::span<const CoMembership>(shared))});
  }
  return g;
}

struct CliqueEdgeCount {
  size_t count = 0;   // distinct pairs seen (at most `cap` + a partial batch when capped)
  bool capped = false;
};

/// Streaming count of distinct clique edges without materializing attributes.
/// With cap > 0, counting stops once the distinct-pair set would exceed cap.
CliqueEdgeCount count_clique_edges(const Hypergraph& h, size_t cap = 0);

/// Reinterprets the clique expansion as a hypergraph of 2-ary hyperedges so
/// rank computations can run on either representation. Edge weights are the
/// sum of the shared hyperedges' weights; synthetic hyperedge ids number the
/// sorted pair list from 0.
Hypergraph clique_as_hypergraph(const Hypergraph& h);

}  // namespace hyper

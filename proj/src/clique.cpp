#include "hyper/clique.hpp"

#include <unordered_set>

namespace hyper {

namespace detail {

std::vector<std::pair<uint64_t, std::vector<uint32_t>>> collect_clique_pairs(const Hypergraph& h) {
  std::unordered_map<uint64_t, std::vector<uint32_t>> pairs;
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    auto row = h.members_at(e);
    for (size_t i = 0; i < row.size(); ++i) {
      for (size_t j = i + 1; j < row.size(); ++j) {
        uint32_t lo = std::min(row[i], row[j]);
        uint32_t hi = std::max(row[i], row[j]);
        pairs[(uint64_t{lo} << 32) | hi].push_back(e);
      }
    }
  }
  std::vector<std::pair<uint64_t, std::vector<uint32_t>>> out;
  out.reserve(pairs.size());
  for (auto& kv : pairs) out.emplace_back(kv.first, std::move(kv.second));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace detail

CliqueEdgeCount count_clique_edges(const Hypergraph& h, size_t cap) {
  std::unordered_set<uint64_t> seen;
  CliqueEdgeCount result;
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    auto row = h.members_at(e);
    for (size_t i = 0; i < row.size(); ++i) {
      for (size_t j = i + 1; j < row.size(); ++j) {
        uint32_t lo = std::min(row[i], row[j]);
        uint32_t hi = std::max(row[i], row[j]);
        seen.insert((uint64_t{lo} << 32) | hi);
        if (cap > 0 && seen.size() > cap) {
          result.count = seen.size();
          result.capped = true;
          return result;
        }
      }
    }
  }
  result.count = seen.size();
  return result;
}

Hypergraph clique_as_hypergraph(const Hypergraph& h) {
  auto g = to_clique_graph(h, [](std::span<const CoMembership> shared) {
    double w = 0.0;
    for (const CoMembership& c : shared) w += c.weight;
    return w;
  });
  HypergraphBuilder b;
  for (const auto& edge : g.edges) {
    uint64_t pair[2] = {edge.a.raw, edge.b.raw};
    b.add_hyperedge(std::span<const uint64_t>(pair, 2), edge.attr);
  }
  for (VertexId v : g.vertices) b.add_vertex(v);
  return b.build();
}

}  // namespace hyper

#pragma once

// Independent reference implementations used to validate the library. Each
// oracle recomputes its answer from the hypergraph structure alone, without
// touching the engine, the partitioner internals, or the combiners.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hyper/hypergraph.hpp"
#include "hyper/partition.hpp"

namespace test_support {

// ---------------------------------------------------------------------------
// Dense rank-diffusion replay: the same recurrence the engine runs, but with
// direct per-node sums over the incidence structure.
// ---------------------------------------------------------------------------

struct DenseRanks {
  std::vector<double> vertex;     // by vertex index
  std::vector<double> hyperedge;  // by hyperedge index
};

inline DenseRanks dense_page_rank(const hyper::Hypergraph& h, double alpha, uint32_t rounds) {
  std::vector<double> vrank(h.num_vertices(), 1.0);
  std::vector<double> vout(h.num_vertices(), 1.0);
  std::vector<double> herank(h.num_hyperedges(), 0.0);
  for (uint32_t r = 0; r < rounds; ++r) {
    for (uint32_t v = 0; v < h.num_vertices(); ++v) {
      if (h.degree_at(v) == 0) continue;  // excluded nodes keep their start value
      double total_weight = 1.0;
      double mass = 1.0;
      if (r > 0) {
        total_weight = 0.0;
        mass = 0.0;
        for (uint32_t e : h.incident_at(v)) {
          total_weight += h.weight_at(e);
          mass += herank[e] / h.cardinality_at(e);
        }
      }
      vrank[v] = alpha + (1.0 - alpha) * mass;
      vout[v] = vrank[v] / total_weight;
    }
    for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
      double gathered = 0.0;
      for (uint32_t v : h.members_at(e)) gathered += vout[v];
      herank[e] = h.weight_at(e) * gathered;
    }
  }
  return {std::move(vrank), std::move(herank)};
}

// ---------------------------------------------------------------------------
// Union-find component oracle: expected label-propagation fixed point.
// ---------------------------------------------------------------------------

struct ComponentLabels {
  std::vector<uint64_t> vertex;
  std::vector<uint64_t> hyperedge;
};

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<size_t> parent_;
};

inline ComponentLabels component_max_labels(const hyper::Hypergraph& h) {
  const size_t nv = h.num_vertices();
  DisjointSets sets(nv + h.num_hyperedges());
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    for (uint32_t v : h.members_at(e)) sets.unite(v, nv + e);
  }
  std::vector<uint64_t> max_id(nv + h.num_hyperedges(), 0);
  for (uint32_t v = 0; v < nv; ++v) {
    size_t root = sets.find(v);
    max_id[root] = std::max(max_id[root], h.vertex_id(v).raw);
  }
  ComponentLabels out;
  out.vertex.resize(nv);
  out.hyperedge.resize(h.num_hyperedges());
  for (uint32_t v = 0; v < nv; ++v) out.vertex[v] = max_id[sets.find(v)];
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) out.hyperedge[e] = max_id[sets.find(nv + e)];
  return out;
}

// ---------------------------------------------------------------------------
// Multi-source BFS over the bipartite graph. Vertex hops are distance/2,
// hyperedge hops (distance+1)/2; unreached nodes get +infinity.
// ---------------------------------------------------------------------------

struct BfsHops {
  std::vector<double> vertex;
  std::vector<double> hyperedge;
};

inline BfsHops bipartite_bfs_hops(const hyper::Hypergraph& h,
                                  std::span<const hyper::VertexId> sources) {
  const size_t nv = h.num_vertices();
  const int64_t unreached = -1;
  std::vector<int64_t> dist(nv + h.num_hyperedges(), unreached);
  std::deque<size_t> queue;
  for (hyper::VertexId s : sources) {
    size_t v = h.vertex_index(s);
    if (dist[v] == unreached) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    size_t n = queue.front();
    queue.pop_front();
    if (n < nv) {
      for (uint32_t e : h.incident_at(static_cast<uint32_t>(n))) {
        if (dist[nv + e] == unreached) {
          dist[nv + e] = dist[n] + 1;
          queue.push_back(nv + e);
        }
      }
    } else {
      for (uint32_t v : h.members_at(static_cast<uint32_t>(n - nv))) {
        if (dist[v] == unreached) {
          dist[v] = dist[n] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  BfsHops out;
  out.vertex.resize(nv);
  out.hyperedge.resize(h.num_hyperedges());
  for (size_t v = 0; v < nv; ++v) {
    out.vertex[v] = dist[v] == unreached ? inf : static_cast<double>(dist[v] / 2);
  }
  for (size_t e = 0; e < h.num_hyperedges(); ++e) {
    int64_t d = dist[nv + e];
    out.hyperedge[e] = d == unreached ? inf : static_cast<double>((d + 1) / 2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Greedy replay: recompute every sequential argmax decision from scratch and
// check the assignment made exactly that choice.
// ---------------------------------------------------------------------------

struct GreedyReplay {
  bool ok = true;
  std::string message;
};

inline GreedyReplay replay_greedy(const hyper::Hypergraph& h, const hyper::PartitionConfig& cfg,
                                  hyper::CutMode mode, const hyper::PartitionAssignment& a) {
  const uint32_t k = cfg.num_parts;
  const bool drive_hyperedges = mode == hyper::CutMode::VertexCut;
  const size_t driven = drive_hyperedges ? h.num_hyperedges() : h.num_vertices();
  const size_t other = drive_hyperedges ? h.num_vertices() : h.num_hyperedges();

  std::vector<uint32_t> home(other);
  for (uint32_t n = 0; n < other; ++n) {
    uint64_t raw = drive_hyperedges ? h.vertex_id(n).raw : h.hyperedge_id(n).raw;
    home[n] = hyper::part_hash(raw, cfg.hash_multiplier, k);
  }
  std::vector<std::set<uint32_t>> replicas(other);
  std::vector<size_t> load(k, 0);

  // Edge indices per driven node.
  std::vector<std::vector<size_t>> group_edges(driven);
  for (size_t i = 0; i < h.num_bipartite_edges(); ++i) {
    group_edges[drive_hyperedges ? h.edge_target(i) : h.edge_source(i)].push_back(i);
  }

  for (uint32_t g = 0; g < driven; ++g) {
    std::vector<uint32_t> members;
    if (drive_hyperedges) {
      auto row = h.members_at(g);
      members.assign(row.begin(), row.end());
    } else {
      auto row = h.incident_at(g);
      members.assign(row.begin(), row.end());
    }

    uint32_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (uint32_t p = 0; p < k; ++p) {
      uint32_t overlap = 0;
      for (uint32_t m : members) {
        if (home[m] == p || replicas[m].count(p)) ++overlap;
      }
      double score = static_cast<double>(overlap) - std::sqrt(static_cast<double>(load[p]));
      if (score > best_score) {
        best_score = score;
        best = p;
      }
    }

    for (size_t i : group_edges[g]) {
      if (a.part_of_edge(i) != best) {
        return {false, "group " + std::to_string(g) + " expected partition " +
                           std::to_string(best) + " but edge " + std::to_string(i) +
                           " sits on partition " + std::to_string(a.part_of_edge(i))};
      }
    }
    load[best] += members.size();
    for (uint32_t m : members) replicas[m].insert(best);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Brute-force clique pairs: for every vertex pair, test shared membership by
// intersecting incidence lists (a different enumeration than the library's
// per-hyperedge pair walk).
// ---------------------------------------------------------------------------

inline std::set<std::pair<uint64_t, uint64_t>> brute_force_clique_pairs(
    const hyper::Hypergraph& h) {
  std::set<std::pair<uint64_t, uint64_t>> pairs;
  for (uint32_t a = 0; a < h.num_vertices(); ++a) {
    for (uint32_t b = a + 1; b < h.num_vertices(); ++b) {
      auto ra = h.incident_at(a);
      auto rb = h.incident_at(b);
      std::vector<uint32_t> shared;
      std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        pairs.emplace(h.vertex_id(a).raw, h.vertex_id(b).raw);
      }
    }
  }
  return pairs;
}

}  // namespace test_support

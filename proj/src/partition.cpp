#include "hyper/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyper/error.hpp"

namespace hyper {

namespace {

void check_config(const PartitionConfig& cfg) {
  if (cfg.num_parts < 1) throw ConfigError("num_parts must be at least 1");
  if (cfg.hash_multiplier % 2 == 0) {
    throw ConfigError("hash_multiplier must be odd to permute the id space");
  }
}

/// Mixes both endpoint ids for BothCut placement so that neither side's id
/// alone decides the partition.
uint64_t mix_pair(uint64_t src_raw, uint64_t dst_raw) {
  return src_raw ^ std::rotl(dst_raw, 32);
}

struct MirrorBuild {
  std::vector<uint32_t> master;
  std::vector<size_t> offsets;
  std::vector<uint32_t> mirrors;
};

/// Derives one side's mirrors (sorted partition sets) and masters (most
/// incident edges, ties to the lowest partition) from (node, part) pairs.
/// Nodes with no incident edges get master part_hash(raw) and no mirrors.
MirrorBuild build_side(size_t num_nodes, std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                       const std::vector<uint64_t>& raw_ids, const PartitionConfig& cfg) {
  std::sort(pairs.begin(), pairs.end());

  MirrorBuild out;
  out.master.assign(num_nodes, 0);
  out.offsets.assign(num_nodes + 1, 0);

  std::vector<uint8_t> touched(num_nodes, 0);
  size_t i = 0;
  while (i < pairs.size()) {
    uint32_t node = pairs[i].first;
    uint32_t best_part = pairs[i].second;
    size_t best_count = 0;
    size_t mirror_count = 0;
    while (i < pairs.size() && pairs[i].first == node) {
      uint32_t part = pairs[i].second;
      size_t count = 0;
      while (i < pairs.size() && pairs[i].first == node && pairs[i].second == part) {
        ++count;
        ++i;
      }
      out.mirrors.push_back(part);
      ++mirror_count;
      if (count > best_count) {  // ties keep the earlier (lower) partition
        best_count = count;
        best_part = part;
      }
    }
    out.master[node] = best_part;
    out.offsets[node + 1] = mirror_count;
    touched[node] = 1;
  }
  for (size_t n = 0; n < num_nodes; ++n) {
    if (!touched[n]) {
      out.master[n] = part_hash(raw_ids[n], cfg.hash_multiplier, cfg.num_parts);
    }
    out.offsets[n + 1] += out.offsets[n];
  }
  return out;
}

}  // namespace

PartitionAssignment PartitionAssignment::from_edge_parts(const Hypergraph& h,
                                                         std::vector<uint32_t> edge_parts,
                                                         const PartitionConfig& cfg) {
  check_config(cfg);
  if (edge_parts.size() != h.num_bipartite_edges()) {
    throw ConfigError(detail::cat("edge partition vector has ", edge_parts.size(),
                                  " entries for a graph with ", h.num_bipartite_edges(),
                                  " bipartite edges"));
  }
  for (uint32_t p : edge_parts) {
    if (p >= cfg.num_parts) {
      throw ConfigError(detail::cat("edge partition ", p, " out of range for ", cfg.num_parts,
                                    " parts"));
    }
  }

  PartitionAssignment a;
  a.num_parts_ = cfg.num_parts;
  a.edge_parts_ = std::move(edge_parts);

  std::vector<std::pair<uint32_t, uint32_t>> vertex_pairs;
  std::vector<std::pair<uint32_t, uint32_t>> hyperedge_pairs;
  vertex_pairs.reserve(a.edge_parts_.size());
  hyperedge_pairs.reserve(a.edge_parts_.size());
  for (size_t i = 0; i < a.edge_parts_.size(); ++i) {
    vertex_pairs.emplace_back(h.edge_source(i), a.edge_parts_[i]);
    hyperedge_pairs.emplace_back(h.edge_target(i), a.edge_parts_[i]);
  }

  std::vector<uint64_t> vertex_raw(h.num_vertices());
  for (uint32_t v = 0; v < h.num_vertices(); ++v) vertex_raw[v] = h.vertex_id(v).raw;
  std::vector<uint64_t> hyperedge_raw(h.num_hyperedges());
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) hyperedge_raw[e] = h.hyperedge_id(e).raw;

  MirrorBuild vside = build_side(h.num_vertices(), vertex_pairs, vertex_raw, cfg);
  a.vertex_master_ = std::move(vside.master);
  a.vertex_mirror_offsets_ = std::move(vside.offsets);
  a.vertex_mirrors_ = std::move(vside.mirrors);

  MirrorBuild eside = build_side(h.num_hyperedges(), hyperedge_pairs, hyperedge_raw, cfg);
  a.hyperedge_master_ = std::move(eside.master);
  a.hyperedge_mirror_offsets_ = std::move(eside.offsets);
  a.hyperedge_mirrors_ = std::move(eside.mirrors);

  return a;
}

PartitionAssignment random_cut(const Hypergraph& h, const PartitionConfig& cfg, CutMode mode) {
  check_config(cfg);
  std::vector<uint32_t> parts(h.num_bipartite_edges());
  for (size_t i = 0; i < parts.size(); ++i) {
    uint64_t src_raw = h.vertex_id(h.edge_source(i)).raw;
    uint64_t dst_raw = h.hyperedge_id(h.edge_target(i)).raw;
    uint64_t key = 0;
    switch (mode) {
      case CutMode::VertexCut: key = dst_raw; break;
      case CutMode::HyperedgeCut: key = src_raw; break;
      case CutMode::BothCut: key = mix_pair(src_raw, dst_raw); break;
    }
    parts[i] = part_hash(key, cfg.hash_multiplier, cfg.num_parts);
  }
  return PartitionAssignment::from_edge_parts(h, std::move(parts), cfg);
}

PartitionAssignment hybrid_cut(const Hypergraph& h, const PartitionConfig& cfg, CutMode mode) {
  check_config(cfg);
  if (mode == CutMode::BothCut) {
    throw ConfigError("hybrid placement needs one side to group by; BothCut is not defined");
  }
  std::vector<uint32_t> parts(h.num_bipartite_edges());
  for (size_t i = 0; i < parts.size(); ++i) {
    uint32_t vidx = h.edge_source(i);
    uint32_t eidx = h.edge_target(i);
    uint64_t src_raw = h.vertex_id(vidx).raw;
    uint64_t dst_raw = h.hyperedge_id(eidx).raw;
    uint64_t key;
    if (mode == CutMode::VertexCut) {
      // Group by hyperedge, but scatter oversized hyperedges by member.
      key = h.cardinality_at(eidx) > cfg.degree_cutoff ? src_raw : dst_raw;
    } else {
      // Group by vertex, but scatter oversized vertices by hyperedge.
      key = h.degree_at(vidx) > cfg.degree_cutoff ? dst_raw : src_raw;
    }
    parts[i] = part_hash(key, cfg.hash_multiplier, cfg.num_parts);
  }
  return PartitionAssignment::from_edge_parts(h, std::move(parts), cfg);
}

namespace {

/// Greedy state for one driven side: the undriven side's hash homes plus the
/// replica sets built up so far, and per-partition edge loads.
struct GreedyState {
  uint32_t k;
  size_t words;
  std::vector<uint64_t> replica_bits;  // [node * words + w]
  std::vector<uint32_t> home;
  std::vector<size_t> load;

  GreedyState(size_t nodes, uint32_t num_parts)
      : k(num_parts),
        words((num_parts + 63) / 64),
        replica_bits(nodes * words, 0),
        home(nodes, 0),
        load(num_parts, 0) {}

  bool on(uint32_t node, uint32_t p) const {
    return (replica_bits[node * words + p / 64] >> (p % 64)) & 1;
  }
  void place(uint32_t node, uint32_t p) { replica_bits[node * words + p / 64] |= uint64_t{1} << (p % 64); }
};

uint32_t greedy_choose(const GreedyState& st, std::span<const uint32_t> group_members) {
  uint32_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (uint32_t p = 0; p < st.k; ++p) {
    uint32_t overlap = 0;
    for (uint32_t m : group_members) {
      if (st.home[m] == p || st.on(m, p)) ++overlap;
    }
    double score = static_cast<double>(overlap) - std::sqrt(static_cast<double>(st.load[p]));
    if (score > best_score) {  // strict: ties keep the lowest partition
      best_score = score;
      best = p;
    }
  }
  return best;
}

}  // namespace

PartitionAssignment greedy_cut(const Hypergraph& h, const PartitionConfig& cfg, CutMode mode) {
  check_config(cfg);
  if (mode == CutMode::BothCut) {
    throw ConfigError("greedy placement needs one side to group by; BothCut is not defined");
  }
  std::vector<uint32_t> parts(h.num_bipartite_edges());

  if (mode == CutMode::VertexCut) {
    // Drive hyperedges in ascending id order; members replicate.
    GreedyState st(h.num_vertices(), cfg.num_parts);
    for (uint32_t v = 0; v < h.num_vertices(); ++v) {
      st.home[v] = part_hash(h.vertex_id(v).raw, cfg.hash_multiplier, cfg.num_parts);
    }
    for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
      auto row = h.members_at(e);
      uint32_t chosen = greedy_choose(st, row);
      auto [first, last] = h.edge_range(e);
      for (size_t i = first; i < last; ++i) parts[i] = chosen;
      st.load[chosen] += row.size();
      for (uint32_t m : row) st.place(m, chosen);
    }
  } else {
    // Drive vertices in ascending id order; hyperedges replicate.
    GreedyState st(h.num_hyperedges(), cfg.num_parts);
    for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
      st.home[e] = part_hash(h.hyperedge_id(e).raw, cfg.hash_multiplier, cfg.num_parts);
    }
    // Canonical edge order is hyperedge-major; index a vertex's edges once.
    std::vector<size_t> edge_of;  // position parallels the incidence array
    edge_of.resize(h.num_bipartite_edges());
    {
      std::vector<size_t> cursor(h.num_vertices(), 0);
      std::vector<size_t> base(h.num_vertices(), 0);
      size_t acc = 0;
      for (uint32_t v = 0; v < h.num_vertices(); ++v) {
        base[v] = acc;
        acc += h.degree_at(v);
      }
      for (size_t i = 0; i < h.num_bipartite_edges(); ++i) {
        uint32_t v = h.edge_source(i);
        edge_of[base[v] + cursor[v]++] = i;
      }
    }
    size_t pos = 0;
    for (uint32_t v = 0; v < h.num_vertices(); ++v) {
      auto row = h.incident_at(v);
      uint32_t chosen = greedy_choose(st, row);
      for (size_t j = 0; j < row.size(); ++j) parts[edge_of[pos + j]] = chosen;
      pos += row.size();
      st.load[chosen] += row.size();
      for (uint32_t e : row) st.place(e, chosen);
    }
  }

  return PartitionAssignment::from_edge_parts(h, std::move(parts), cfg);
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "rvc") return Strategy{StrategyFamily::Random, CutMode::VertexCut};
  if (name == "rhec") return Strategy{StrategyFamily::Random, CutMode::HyperedgeCut};
  if (name == "rbc") return Strategy{StrategyFamily::Random, CutMode::BothCut};
  if (name == "hvc") return Strategy{StrategyFamily::Hybrid, CutMode::VertexCut};
  if (name == "hhec") return Strategy{StrategyFamily::Hybrid, CutMode::HyperedgeCut};
  if (name == "gvc") return Strategy{StrategyFamily::Greedy, CutMode::VertexCut};
  if (name == "ghec") return Strategy{StrategyFamily::Greedy, CutMode::HyperedgeCut};
  return std::nullopt;
}

std::string strategy_name(Strategy s) {
  switch (s.family) {
    case StrategyFamily::Random:
      return s.mode == CutMode::VertexCut ? "rvc"
             : s.mode == CutMode::HyperedgeCut ? "rhec" : "rbc";
    case StrategyFamily::Hybrid:
      return s.mode == CutMode::VertexCut ? "hvc" : "hhec";
    case StrategyFamily::Greedy:
      return s.mode == CutMode::VertexCut ? "gvc" : "ghec";
  }
  return "?";
}

std::vector<std::string> all_strategy_names() {
  return {"rvc", "rhec", "rbc", "hvc", "hhec", "gvc", "ghec"};
}

PartitionAssignment run_strategy(const Hypergraph& h, const PartitionConfig& cfg, Strategy s) {
  switch (s.family) {
    case StrategyFamily::Random: return random_cut(h, cfg, s.mode);
    case StrategyFamily::Hybrid: return hybrid_cut(h, cfg, s.mode);
    case StrategyFamily::Greedy: return greedy_cut(h, cfg, s.mode);
  }
  throw ConfigError("unknown strategy family");
}

PartitionStats partition_stats(const Hypergraph& h, const PartitionAssignment& a) {
  PartitionStats s;
  s.per_partition_edges.assign(a.num_parts(), 0);
  for (uint32_t p : a.edge_parts()) ++s.per_partition_edges[p];

  size_t vertex_mirrors = 0;
  for (uint32_t v = 0; v < h.num_vertices(); ++v) vertex_mirrors += a.vertex_mirrors(v).size();
  size_t hyperedge_mirrors = 0;
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    hyperedge_mirrors += a.hyperedge_mirrors(e).size();
  }
  s.replication_factor_vertices =
      h.num_vertices() ? static_cast<double>(vertex_mirrors) / h.num_vertices() : 0.0;
  s.replication_factor_hyperedges =
      h.num_hyperedges() ? static_cast<double>(hyperedge_mirrors) / h.num_hyperedges() : 0.0;

  size_t total = h.num_bipartite_edges();
  if (total == 0) {
    s.edge_balance = 1.0;
  } else {
    size_t max_edges = *std::max_element(s.per_partition_edges.begin(),
                                         s.per_partition_edges.end());
    s.edge_balance = static_cast<double>(max_edges) * a.num_parts() / static_cast<double>(total);
  }
  return s;
}

}  // namespace hyper

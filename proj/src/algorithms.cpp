#include "hyper/algorithms.hpp"

#include <algorithm>
#include <cmath>

namespace hyper {

namespace {

struct VertexRankState {
  double rank = 1.0;
  bool operator==(const VertexRankState&) const = default;
};

struct HyperedgeRankState {
  double rank = 0.0;
  bool operator==(const HyperedgeRankState&) const = default;
};

struct HyperedgeRankEntropyState {
  double rank = 0.0;
  double entropy = 0.0;
  bool operator==(const HyperedgeRankEntropyState&) const = default;
};

void check_page_rank_inputs(const Hypergraph& h, const PageRankConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw ConfigError(detail::cat("alpha must lie strictly between 0 and 1, got ", cfg.alpha));
  }
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    if (!(h.weight_at(e) > 0.0)) {
      throw ConfigError(detail::cat("hyperedge ", h.hyperedge_id(e).raw,
                                    " has non-positive weight ", h.weight_at(e),
                                    "; rank diffusion needs positive weights"));
    }
  }
}

size_t count_degree_zero(const Hypergraph& h) {
  size_t n = 0;
  for (uint32_t v = 0; v < h.num_vertices(); ++v) {
    if (h.degree_at(v) == 0) ++n;
  }
  return n;
}

}  // namespace

PageRankResult page_rank(const Hypergraph& h, const PartitionAssignment& a,
                         const PageRankConfig& cfg, unsigned threads) {
  check_page_rank_inputs(h, cfg);
  const double alpha = cfg.alpha;

  // Messages: vertex -> hyperedge carries the vertex's normalized rank;
  // hyperedge -> vertex carries (incident weight, rank share per member).
  using ToHE = double;
  using ToV = std::pair<double, double>;

  Program<VertexRankState, ToV, ToHE> vprog;
  vprog.combiner = sum_combiner<ToHE>();
  vprog.procedure = [&h, alpha](Step, NodeId id, const VertexRankState&, const ToV& msg,
                                Context<VertexRankState, ToHE>& ctx) {
    if (h.degree(id.vertex()) == 0) return;  // excluded from the recurrence
    auto [total_weight, rank_mass] = msg;
    double new_rank = alpha + (1.0 - alpha) * rank_mass;
    ctx.become({new_rank});
    ctx.broadcast(new_rank / total_weight);
  };

  Program<HyperedgeRankState, ToHE, ToV> heprog;
  heprog.combiner = pair_sum_combiner<double, double>();
  heprog.procedure = [&h](Step, NodeId id, const HyperedgeRankState&, const ToHE& msg,
                          Context<HyperedgeRankState, ToV>& ctx) {
    uint32_t e = h.hyperedge_index(id.hyperedge());
    double weight = h.weight_at(e);
    double new_rank = msg * weight;
    ctx.become({new_rank});
    ctx.broadcast({weight, new_rank / h.cardinality_at(e)});
  };

  ComputeOptions opts;
  opts.max_iters = cfg.iterations;
  opts.threads = threads;
  auto outcome = compute(h, a, opts, make_attributes<VertexRankState, HyperedgeRankState>(h),
                         ToV{1.0, 1.0}, vprog, heprog);

  PageRankResult result;
  result.excluded_vertices = count_degree_zero(h);
  result.report = std::move(outcome.report);
  result.vertex_rank.reserve(h.num_vertices());
  for (const auto& s : outcome.attrs.vertex) result.vertex_rank.push_back(s.rank);
  result.hyperedge_rank.reserve(h.num_hyperedges());
  for (const auto& s : outcome.attrs.hyperedge) result.hyperedge_rank.push_back(s.rank);
  return result;
}

double rank_entropy_bits(std::span<const double> mass) {
  double total = 0.0;
  for (double m : mass) {
    if (m < 0.0) throw ConfigError(detail::cat("entropy input has negative mass ", m));
    total += m;
  }
  if (total <= 0.0) return 0.0;
  const double log2e = 1.0 / std::log(2.0);
  double bits = 0.0;
  for (double m : mass) {
    if (m <= 0.0) continue;  // lim p->0 of p*log(1/p) is 0
    double p = m / total;
    bits += p * std::log(1.0 / p) * log2e;
  }
  return bits;
}

PageRankEntropyResult page_rank_entropy(const Hypergraph& h, const PartitionAssignment& a,
                                        const PageRankConfig& cfg, unsigned threads) {
  check_page_rank_inputs(h, cfg);
  const double alpha = cfg.alpha;

  // The hyperedge side needs each member's rank separately to measure
  // concentration, so upward messages collect (rank, total weight) pairs
  // instead of pre-summing them.
  using ToHE = std::vector<std::pair<double, double>>;
  using ToV = std::pair<double, double>;

  Program<VertexRankState, ToV, ToHE> vprog;
  vprog.combiner = concat_combiner<std::pair<double, double>>();
  vprog.procedure = [&h, alpha](Step, NodeId id, const VertexRankState&, const ToV& msg,
                                Context<VertexRankState, ToHE>& ctx) {
    if (h.degree(id.vertex()) == 0) return;
    auto [total_weight, rank_mass] = msg;
    double new_rank = alpha + (1.0 - alpha) * rank_mass;
    ctx.become({new_rank});
    ctx.broadcast({{new_rank, total_weight}});
  };

  Program<HyperedgeRankEntropyState, ToHE, ToV> heprog;
  heprog.combiner = pair_sum_combiner<double, double>();
  heprog.procedure = [&h](Step, NodeId id, const HyperedgeRankEntropyState&, const ToHE& msg,
                          Context<HyperedgeRankEntropyState, ToV>& ctx) {
    uint32_t e = h.hyperedge_index(id.hyperedge());
    double weight = h.weight_at(e);

    // Concatenation is order-sensitive; sort so the reduction below cannot
    // depend on how the partitioning grouped the messages.
    ToHE pairs(msg);
    std::sort(pairs.begin(), pairs.end());

    double mass = 0.0;
    std::vector<double> ranks;
    ranks.reserve(pairs.size());
    for (auto [rank, total_weight] : pairs) {
      mass += rank / total_weight;
      ranks.push_back(rank);
    }
    double new_rank = mass * weight;
    ctx.become({new_rank, rank_entropy_bits(ranks)});
    ctx.broadcast({weight, new_rank / h.cardinality_at(e)});
  };

  ComputeOptions opts;
  opts.max_iters = cfg.iterations;
  opts.threads = threads;
  auto outcome =
      compute(h, a, opts, make_attributes<VertexRankState, HyperedgeRankEntropyState>(h),
              ToV{1.0, 1.0}, vprog, heprog);

  PageRankEntropyResult result;
  result.excluded_vertices = count_degree_zero(h);
  result.report = std::move(outcome.report);
  result.vertex_rank.reserve(h.num_vertices());
  for (const auto& s : outcome.attrs.vertex) result.vertex_rank.push_back(s.rank);
  result.hyperedge_rank.reserve(h.num_hyperedges());
  result.hyperedge_entropy.reserve(h.num_hyperedges());
  for (const auto& s : outcome.attrs.hyperedge) {
    result.hyperedge_rank.push_back(s.rank);
    result.hyperedge_entropy.push_back(s.entropy);
  }
  return result;
}

LabelPropagationResult label_propagation(const Hypergraph& h, const PartitionAssignment& a,
                                         uint32_t max_iters, unsigned threads) {
  if (max_iters < 1) throw ConfigError("label propagation needs at least one round");

  using Label = uint64_t;

  Program<Label, Label, Label> vprog;
  vprog.combiner = max_combiner<Label>();
  vprog.procedure = [](Step step, NodeId id, const Label& attr, const Label& msg,
                       Context<Label, Label>& ctx) {
    if (step == 0) {
      Label own = id.vertex().raw;
      ctx.become(own);
      ctx.broadcast(own);
      return;
    }
    if (msg > attr) {  // only growth spreads; equality means nothing new
      ctx.become(msg);
      ctx.broadcast(msg);
    }
  };

  Program<Label, Label, Label> heprog;
  heprog.combiner = max_combiner<Label>();
  heprog.procedure = [](Step, NodeId, const Label& attr, const Label& msg,
                        Context<Label, Label>& ctx) {
    if (msg > attr) {
      ctx.become(msg);
      ctx.broadcast(msg);
    }
  };

  ComputeOptions opts;
  opts.max_iters = max_iters;
  opts.threads = threads;
  auto outcome = compute(h, a, opts, make_attributes<Label, Label>(h, Label{0}, Label{0}),
                         Label{0}, vprog, heprog);

  return {std::move(outcome.attrs.vertex), std::move(outcome.attrs.hyperedge),
          std::move(outcome.report)};
}

ShortestPathsResult shortest_paths(const Hypergraph& h, const PartitionAssignment& a,
                                   std::span<const VertexId> sources, uint32_t max_iters,
                                   unsigned threads) {
  if (sources.empty()) throw ConfigError("shortest paths needs at least one source vertex");
  AttributeSet<double, double> attrs =
      make_attributes<double, double>(h, kInfiniteHop, kInfiniteHop);
  for (VertexId s : sources) {
    attrs.vertex[h.vertex_index(s)] = 0.0;  // vertex_index throws for unknown ids
  }

  Program<double, double, double> vprog;
  vprog.combiner = min_combiner<double>();
  vprog.procedure = [](Step step, NodeId, const double& hop, const double& msg,
                       Context<double, double>& ctx) {
    if (step == 0) {
      if (hop == 0.0) ctx.broadcast(hop + 1.0);  // sources kick off the wavefront
      return;
    }
    if (hop > msg) {
      ctx.become(msg);
      ctx.broadcast(msg + 1.0);
    }
  };

  Program<double, double, double> heprog;
  heprog.combiner = min_combiner<double>();
  heprog.procedure = [](Step, NodeId, const double& hop, const double& msg,
                        Context<double, double>& ctx) {
    if (hop > msg) {
      ctx.become(msg);
      ctx.broadcast(msg);  // members resolve their own hop from this
    }
  };

  ComputeOptions opts;
  opts.max_iters = max_iters;
  opts.threads = threads;
  auto outcome = compute(h, a, opts, std::move(attrs), kInfiniteHop, vprog, heprog);

  return {std::move(outcome.attrs.vertex), std::move(outcome.attrs.hyperedge),
          std::move(outcome.report)};
}

}  // namespace hyper

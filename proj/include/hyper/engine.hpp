#pragma once

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyper/combiners.hpp"
#include "hyper/error.hpp"
#include "hyper/hypergraph.hpp"
#include "hyper/partition.hpp"
#include "hyper/report.hpp"
#include "hyper/thread_pool.hpp"

namespace hyper {

using Step = uint32_t;

/// Where a send() goes: every incident node on the other side, or an explicit
/// subset of them.
class DestinationSelector {
 public:
  static DestinationSelector all() { return DestinationSelector(true, {}); }
  static DestinationSelector to(std::vector<NodeId> targets) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    return DestinationSelector(false, std::move(targets));
  }
  static DestinationSelector to(NodeId target) { return to(std::vector<NodeId>{target}); }

  bool is_all() const { return all_; }
  std::span<const NodeId> targets() const { return targets_; }
  std::vector<NodeId> take_targets() && { return std::move(targets_); }

 private:
  DestinationSelector(bool all, std::vector<NodeId> targets)
      : all_(all), targets_(std::move(targets)) {}
  bool all_;
  std::vector<NodeId> targets_;  // sorted, deduplicated
};

namespace detail {

/// One send() call, harvested from a program run. The payload is either a
/// constant (broadcast) or a function of the recipient id.
template <typename Out>
struct Emission {
  std::optional<Out> constant;
  std::function<Out(NodeId)> fn;
  bool to_all = true;
  std::vector<NodeId> targets;  // sorted; used when !to_all

  bool covers(NodeId dest) const {
    return to_all || std::binary_search(targets.begin(), targets.end(), dest);
  }
  Out materialize(NodeId dest) const { return constant ? *constant : fn(dest); }
};

template <typename Out>
using Outbox = std::vector<Emission<Out>>;

}  // namespace detail

/// Handed to a procedure while it runs. become() replaces the node's
/// attribute once the phase's run step finishes; broadcast()/send() queue
/// messages for every (or selected) incident node on the opposite side.
/// broadcast(m) is exactly send(constant m, all incident).
template <typename Attr, typename OutMsg>
class Context {
 public:
  void become(Attr attr) {
    new_attr_ = std::move(attr);
  }

  void broadcast(OutMsg msg) {
    detail::Emission<OutMsg> e;
    e.constant = std::move(msg);
    e.to_all = true;
    emissions_.push_back(std::move(e));
  }

  void send(std::function<OutMsg(NodeId)> make_msg, DestinationSelector to) {
    detail::Emission<OutMsg> e;
    e.fn = std::move(make_msg);
    e.to_all = to.is_all();
    if (!e.to_all) e.targets = std::move(to).take_targets();
    emissions_.push_back(std::move(e));
  }

  // Engine-side harvest.
  bool became() const { return new_attr_.has_value(); }
  Attr take_attr() { return std::move(*new_attr_); }
  bool emitted() const { return !emissions_.empty(); }
  detail::Outbox<OutMsg> take_emissions() { return std::move(emissions_); }

 private:
  std::optional<Attr> new_attr_;
  detail::Outbox<OutMsg> emissions_;
};

/// A vertex or hyperedge program: the per-node procedure plus the combiner
/// for the messages it emits. The combiner must be associative and
/// commutative; the engine relies on that to pre-combine per partition and
/// never validates it.
template <typename Attr, typename InMsg, typename OutMsg>
struct Program {
  std::function<void(Step, NodeId, const Attr&, const InMsg&, Context<Attr, OutMsg>&)> procedure;
  MessageCombiner<OutMsg> combiner;
};

struct ComputeOptions {
  /// Upper bound on full rounds (vertex phase + hyperedge phase).
  uint32_t max_iters = 30;
  /// Worker threads; 0 means one per hardware thread.
  unsigned threads = 1;
  /// After every sync, assert each replica equals its master copy (debug).
  bool check_mirror_coherence = false;
};

template <typename VAttr, typename HEAttr>
struct AttributeSet {
  std::vector<VAttr> vertex;
  std::vector<HEAttr> hyperedge;
};

template <typename VAttr, typename HEAttr>
AttributeSet<VAttr, HEAttr> make_attributes(const Hypergraph& h, VAttr v_init = VAttr{},
                                            HEAttr he_init = HEAttr{}) {
  return {std::vector<VAttr>(h.num_vertices(), v_init),
          std::vector<HEAttr>(h.num_hyperedges(), he_init)};
}

template <typename VAttr, typename HEAttr>
struct ComputeOutcome {
  AttributeSet<VAttr, HEAttr> attrs;
  RunReport report;
};

namespace detail {

/// Partition-local layout derived from a hypergraph and an assignment: which
/// nodes live on each partition (every mirror holds a local slot), which
/// masters run there, the edges in partition-local coordinates, and each
/// node's replica placements for sync pushes.
struct ExecutionPlan {
  struct Side {
    std::vector<std::vector<uint32_t>> nodes;    // per partition: global idx, ascending
    std::vector<std::vector<uint32_t>> masters;  // per partition: global idx, ascending
    std::vector<size_t> replica_offsets;         // per node
    std::vector<std::pair<uint32_t, uint32_t>> replicas;  // (partition, local slot)
    std::vector<uint32_t> master_part;           // per node

    std::span<const std::pair<uint32_t, uint32_t>> replicas_of(uint32_t node) const {
      return {replicas.data() + replica_offsets[node],
              replicas.data() + replica_offsets[node + 1]};
    }
  };
  uint32_t num_parts = 1;
  Side vertices;
  Side hyperedges;
  /// Per partition: (vertex local slot, hyperedge local slot) per edge, in
  /// canonical edge order.
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> edges;
};

ExecutionPlan build_execution_plan(const Hypergraph& h, const PartitionAssignment& a);

/// Run-state for one side: canonical master copies plus per-partition replica
/// copies of attribute and outbox, and the inbox/accumulators for messages
/// addressed to this side.
template <typename Attr, typename Out, typename In>
struct SideState {
  std::vector<Attr>* attr = nullptr;  // canonical, lives in the outcome
  std::vector<Outbox<Out>> outbox;
  std::vector<In> inbox;
  std::vector<uint8_t> inbox_has;

  std::vector<std::vector<Attr>> local_attr;
  std::vector<std::vector<Outbox<Out>>> local_outbox;
  std::vector<std::vector<In>> acc;
  std::vector<std::vector<uint8_t>> acc_has;
  std::vector<std::vector<uint32_t>> acc_touched;

  const ExecutionPlan::Side* plan = nullptr;

  void init(std::vector<Attr>& canonical, const ExecutionPlan::Side& side, uint32_t k) {
    attr = &canonical;
    plan = &side;
    outbox.assign(canonical.size(), {});
    inbox.resize(canonical.size());
    inbox_has.assign(canonical.size(), 0);
    local_attr.resize(k);
    local_outbox.resize(k);
    acc.resize(k);
    acc_has.resize(k);
    acc_touched.resize(k);
    for (uint32_t p = 0; p < k; ++p) {
      size_t n = side.nodes[p].size();
      local_attr[p].reserve(n);
      for (uint32_t g : side.nodes[p]) local_attr[p].push_back(canonical[g]);
      local_outbox[p].assign(n, {});
      acc[p].resize(n);
      acc_has[p].assign(n, 0);
    }
  }
};

struct PhaseCounters {
  size_t ran = 0;
  size_t emitted = 0;
  size_t combined = 0;
  size_t shipped = 0;
  size_t mirror_syncs = 0;
};

}  // namespace detail

/// Reference aggregation over an explicit emission list: pre-combines per
/// (partition, destination), then merges per destination across partitions in
/// ascending partition order. `shipped` counts the (partition, destination)
/// batches whose partition is not the destination's master. The engine's
/// dense per-round path follows exactly this semantics.
template <typename Msg>
struct PartitionedEmission {
  uint32_t partition;
  NodeId destination;
  Msg msg;
};

template <typename Msg>
struct AggregatedMessages {
  std::vector<std::pair<NodeId, Msg>> combined;  // ascending destination
  size_t shipped = 0;
};

template <typename Msg>
AggregatedMessages<Msg> aggregate_messages(std::vector<PartitionedEmission<Msg>> emissions,
                                           const MessageCombiner<Msg>& combiner,
                                           const std::function<uint32_t(NodeId)>& master_of) {
  std::stable_sort(emissions.begin(), emissions.end(),
                   [](const PartitionedEmission<Msg>& a, const PartitionedEmission<Msg>& b) {
                     if (a.destination != b.destination) return a.destination < b.destination;
                     return a.partition < b.partition;
                   });
  AggregatedMessages<Msg> out;
  size_t i = 0;
  while (i < emissions.size()) {
    NodeId dest = emissions[i].destination;
    uint32_t master = master_of(dest);
    std::optional<Msg> total;
    while (i < emissions.size() && emissions[i].destination == dest) {
      uint32_t part = emissions[i].partition;
      Msg local = emissions[i].msg;
      ++i;
      while (i < emissions.size() && emissions[i].destination == dest &&
             emissions[i].partition == part) {
        local = combiner(local, emissions[i].msg);
        ++i;
      }
      if (part != master) ++out.shipped;
      total = total ? combiner(*total, local) : std::move(local);
    }
    out.combined.emplace_back(dest, std::move(*total));
  }
  return out;
}

namespace detail {

template <typename SrcAttr, typename DstAttr, typename In, typename Out, typename DstOut>
PhaseCounters run_phase(const Hypergraph& h, const ExecutionPlan& plan, ThreadPool& pool,
                        SideState<SrcAttr, Out, In>& src, SideState<DstAttr, DstOut, Out>& dst,
                        const Program<SrcAttr, In, Out>& prog, Step round, bool all_active,
                        const In* initial_msg, bool src_is_vertex, bool check_coherence) {
  PhaseCounters counters;
  const uint32_t k = plan.num_parts;

  // Per-partition scratch filled by the run step.
  std::vector<std::vector<uint32_t>> changed(k);
  std::vector<size_t> ran_per_part(k, 0);
  std::vector<size_t> emitted_per_part(k, 0);

  // Run step: masters execute the procedure; attribute updates land on the
  // canonical copy, emissions on the canonical outbox. Stale local outboxes
  // from the previous round are cleared first so the materialize step only
  // ever sees this round's messages.
  pool.parallel_for(k, [&](size_t p) {
    for (auto& ob : src.local_outbox[p]) ob.clear();
    for (uint32_t g : src.plan->masters[p]) {
      if (!all_active && !src.inbox_has[g]) continue;
      ++ran_per_part[p];
      NodeId id = src_is_vertex ? NodeId(h.vertex_id(g)) : NodeId(h.hyperedge_id(g));
      Context<SrcAttr, Out> ctx;
      const In& msg = all_active ? *initial_msg : src.inbox[g];
      prog.procedure(round, id, (*src.attr)[g], msg, ctx);

      detail::Outbox<Out> emissions = ctx.take_emissions();
      for (const auto& e : emissions) {
        if (e.to_all) continue;
        for (NodeId t : e.targets) {
          bool incident = false;
          if (src_is_vertex && t.is_hyperedge() && h.has_hyperedge(t.hyperedge())) {
            auto row = h.incident_at(g);
            incident = std::binary_search(row.begin(), row.end(),
                                          h.hyperedge_index(t.hyperedge()));
          } else if (!src_is_vertex && t.is_vertex() && h.has_vertex(t.vertex())) {
            auto row = h.members_at(g);
            uint32_t vidx = h.vertex_index(t.vertex());
            incident = std::find(row.begin(), row.end(), vidx) != row.end();
          }
          if (!incident) {
            throw ExecutionError(detail::cat(
                src_is_vertex ? "vertex " : "hyperedge ",
                src_is_vertex ? h.vertex_id(g).raw : h.hyperedge_id(g).raw,
                " sent a message to non-incident ",
                t.is_vertex() ? "vertex " : "hyperedge ",
                t.is_vertex() ? t.vertex().raw : t.hyperedge().raw));
          }
        }
      }

      bool did_become = ctx.became();
      if (did_become) (*src.attr)[g] = ctx.take_attr();
      bool did_emit = !emissions.empty();
      src.outbox[g] = std::move(emissions);
      if (did_become || did_emit) changed[p].push_back(g);
    }
  });
  for (uint32_t p = 0; p < k; ++p) counters.ran += ran_per_part[p];

  // The inbox was consumed by this run; the opposite phase refills it.
  if (!all_active) std::fill(src.inbox_has.begin(), src.inbox_has.end(), uint8_t{0});

  // Sync step: push changed masters to every replica slot. Pushes to a
  // partition other than the master's count as mirror syncs.
  for (uint32_t p = 0; p < k; ++p) {
    for (uint32_t g : changed[p]) {
      for (auto [part, slot] : src.plan->replicas_of(g)) {
        src.local_attr[part][slot] = (*src.attr)[g];
        src.local_outbox[part][slot] = src.outbox[g];
        if (part != src.plan->master_part[g]) ++counters.mirror_syncs;
      }
    }
  }

  if (check_coherence) {
    if constexpr (std::equality_comparable<SrcAttr>) {
      for (uint32_t p = 0; p < k; ++p) {
        for (size_t s = 0; s < src.plan->nodes[p].size(); ++s) {
          uint32_t g = src.plan->nodes[p][s];
          if (!(src.local_attr[p][s] == (*src.attr)[g])) {
            throw ExecutionError(detail::cat("replica of node ", g, " on partition ", p,
                                             " diverged from its master copy"));
          }
          if (src.local_outbox[p][s].size() != src.outbox[g].size()) {
            throw ExecutionError(detail::cat("replica outbox of node ", g, " on partition ", p,
                                             " diverged from its master copy"));
          }
        }
      }
    }
  }

  // Materialize step: every edge delivers the covering emissions of its
  // source replica to the destination's partition-local accumulator.
  pool.parallel_for(k, [&](size_t p) {
    auto& acc = dst.acc[p];
    auto& acc_has = dst.acc_has[p];
    auto& touched = dst.acc_touched[p];
    touched.clear();
    for (auto [v_slot, e_slot] : plan.edges[p]) {
      uint32_t src_slot = src_is_vertex ? v_slot : e_slot;
      uint32_t dst_slot = src_is_vertex ? e_slot : v_slot;
      const auto& ob = src.local_outbox[p][src_slot];
      if (ob.empty()) continue;
      uint32_t dst_global = dst.plan->nodes[p][dst_slot];
      NodeId dest = src_is_vertex ? NodeId(h.hyperedge_id(dst_global))
                                  : NodeId(h.vertex_id(dst_global));
      for (const auto& e : ob) {
        if (!e.covers(dest)) continue;
        Out msg = e.materialize(dest);
        ++emitted_per_part[p];
        if (acc_has[dst_slot]) {
          acc[dst_slot] = prog.combiner(acc[dst_slot], msg);
        } else {
          acc[dst_slot] = std::move(msg);
          acc_has[dst_slot] = 1;
          touched.push_back(dst_slot);
        }
      }
    }
  });
  for (uint32_t p = 0; p < k; ++p) counters.emitted += emitted_per_part[p];

  // Merge step: fold partition accumulators into the destination inboxes in
  // ascending partition order, so results do not depend on thread count. A
  // batch whose partition is not the destination's master counts as shipped.
  for (uint32_t p = 0; p < k; ++p) {
    for (uint32_t slot : dst.acc_touched[p]) {
      uint32_t g = dst.plan->nodes[p][slot];
      if (dst.inbox_has[g]) {
        dst.inbox[g] = prog.combiner(dst.inbox[g], dst.acc[p][slot]);
      } else {
        dst.inbox[g] = std::move(dst.acc[p][slot]);
        dst.inbox_has[g] = 1;
        ++counters.combined;
      }
      if (p != dst.plan->master_part[g]) ++counters.shipped;
      dst.acc_has[p][slot] = 0;
    }
    dst.acc_touched[p].clear();
  }

  return counters;
}

}  // namespace detail

/// Runs the alternating two-phase loop: every round executes active vertices
/// (round 0: all of them, fed `initial_msg`), delivers their messages to
/// hyperedges, executes active hyperedges, and delivers back to vertices.
/// A node is active when at least one combined message addressed it in the
/// previous phase. Stops after `max_iters` rounds or as soon as a phase emits
/// nothing. Throws ExecutionError when the assignment does not cover the
/// hypergraph or a program sends to a non-incident explicit target.
template <typename VAttr, typename HEAttr, typename ToV, typename ToHE>
ComputeOutcome<VAttr, HEAttr> compute(const Hypergraph& h, const PartitionAssignment& assignment,
                                      const ComputeOptions& opts,
                                      AttributeSet<VAttr, HEAttr> attrs, const ToV& initial_msg,
                                      const Program<VAttr, ToV, ToHE>& vertex_program,
                                      const Program<HEAttr, ToHE, ToV>& hyperedge_program) {
  if (!assignment.covers(h)) {
    throw ExecutionError("partition assignment does not match the hypergraph's shape");
  }
  if (attrs.vertex.size() != h.num_vertices() || attrs.hyperedge.size() != h.num_hyperedges()) {
    throw ExecutionError("attribute set does not match the hypergraph's shape");
  }

  ComputeOutcome<VAttr, HEAttr> out;
  out.attrs = std::move(attrs);

  detail::ExecutionPlan plan = detail::build_execution_plan(h, assignment);
  unsigned threads = opts.threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : opts.threads;
  detail::ThreadPool pool(threads - 1);

  detail::SideState<VAttr, ToHE, ToV> vside;
  vside.init(out.attrs.vertex, plan.vertices, plan.num_parts);
  detail::SideState<HEAttr, ToV, ToHE> heside;
  heside.init(out.attrs.hyperedge, plan.hyperedges, plan.num_parts);

  auto start = std::chrono::steady_clock::now();
  for (Step round = 0; round < opts.max_iters; ++round) {
    auto round_start = std::chrono::steady_clock::now();
    RoundStats rs;
    rs.round = round;

    detail::PhaseCounters a =
        detail::run_phase(h, plan, pool, vside, heside, vertex_program, round,
                          /*all_active=*/round == 0, &initial_msg,
                          /*src_is_vertex=*/true, opts.check_mirror_coherence);
    rs.active_vertices = a.ran;
    rs.to_hyperedge_emitted = a.emitted;
    rs.to_hyperedge_combined = a.combined;
    rs.to_hyperedge_shipped = a.shipped;
    rs.vertex_mirror_syncs = a.mirror_syncs;

    bool halt = a.emitted == 0;
    if (!halt) {
      detail::PhaseCounters b =
          detail::run_phase(h, plan, pool, heside, vside, hyperedge_program, round,
                            /*all_active=*/false, static_cast<const ToHE*>(nullptr),
                            /*src_is_vertex=*/false, opts.check_mirror_coherence);
      rs.active_hyperedges = b.ran;
      rs.to_vertex_emitted = b.emitted;
      rs.to_vertex_combined = b.combined;
      rs.to_vertex_shipped = b.shipped;
      rs.hyperedge_mirror_syncs = b.mirror_syncs;
      halt = b.emitted == 0;
    }

    rs.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          round_start)
                    .count();
    out.report.add(rs);
    if (halt) {
      out.report.quiesced = true;
      break;
    }
  }
  out.report.execute_millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hyper

#include "hyper/report.hpp"

#include "json.hpp"

namespace hyper {

namespace {

nlohmann::json round_to_json(const RoundStats& r) {
  return {
      {"round", r.round},
      {"active_vertices", r.active_vertices},
      {"active_hyperedges", r.active_hyperedges},
      {"to_hyperedge", {{"emitted", r.to_hyperedge_emitted},
                        {"combined", r.to_hyperedge_combined},
                        {"shipped", r.to_hyperedge_shipped}}},
      {"to_vertex", {{"emitted", r.to_vertex_emitted},
                     {"combined", r.to_vertex_combined},
                     {"shipped", r.to_vertex_shipped}}},
      {"mirror_syncs", {{"vertex", r.vertex_mirror_syncs},
                        {"hyperedge", r.hyperedge_mirror_syncs}}},
      {"millis", r.millis},
  };
}

}  // namespace

std::string to_json_string(const RunReport& report, int indent) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const RoundStats& r : report.rounds) rounds.push_back(round_to_json(r));
  nlohmann::json doc = {
      {"rounds", std::move(rounds)},
      {"rounds_executed", report.rounds_executed()},
      {"quiesced", report.quiesced},
      {"totals", {{"emitted", report.total_emitted},
                  {"combined", report.total_combined},
                  {"shipped", report.total_shipped},
                  {"mirror_syncs", report.total_mirror_syncs}}},
      {"execute_millis", report.execute_millis},
  };
  return doc.dump(indent);
}

}  // namespace hyper

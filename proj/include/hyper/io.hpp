#pragma once

#include <string>
#include <string_view>

#include "hyper/algorithms.hpp"
#include "hyper/hypergraph.hpp"

namespace hyper {

/// Parses the hyperedge-list text format: one hyperedge per line as
/// whitespace-separated member vertex ids, optionally prefixed by a weight
/// token `w=<real>`. Blank lines and lines whose first token starts with `#`
/// are skipped. Hyperedge ids number the kept lines from 0 in file order.
/// Throws ParseError with `source_name` and the 1-based line number.
Hypergraph parse_hyperedge_list(std::string_view text, std::string_view source_name = "<memory>");

/// Serializes to the same format: ascending hyperedge id, one line each,
/// `w=` emitted only for weights other than 1.0, members in stored order.
/// Weights use shortest round-trip formatting, so parse(serialize(h))
/// reproduces h for any graph without isolated vertices.
std::string serialize_hyperedge_list(const Hypergraph& h);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& h, const std::string& path);

/// Result tables, one row per node: kind, external id, then value columns.
void write_rank_tsv(const std::string& path, const Hypergraph& h, const PageRankResult& r);
void write_rank_entropy_tsv(const std::string& path, const Hypergraph& h,
                            const PageRankEntropyResult& r);
void write_label_tsv(const std::string& path, const Hypergraph& h,
                     const LabelPropagationResult& r);
void write_hop_tsv(const std::string& path, const Hypergraph& h, const ShortestPathsResult& r);

}  // namespace hyper

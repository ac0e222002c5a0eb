#include "hyper/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace hyper {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

[[noreturn]] void parse_fail(std::string_view source, size_t line_no, std::string_view what) {
  throw ParseError(detail::cat(source, ":", line_no, ": ", what));
}

/// Shortest representation that parses back to the same double.
std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

Hypergraph parse_hyperedge_list(std::string_view text, std::string_view source_name) {
  HypergraphBuilder builder;
  size_t line_no = 0;
  size_t pos = 0;
  std::vector<uint64_t> members;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#') continue;

    size_t first_member = 0;
    double weight = 1.0;
    if (tokens[0].rfind("w=", 0) == 0) {
      std::string_view value = tokens[0].substr(2);
      const char* begin = value.data();
      const char* end = begin + value.size();
      auto [ptr, ec] = std::from_chars(begin, end, weight);
      if (ec != std::errc{} || ptr != end || value.empty()) {
        parse_fail(source_name, line_no, detail::cat("bad weight token '", tokens[0], "'"));
      }
      if (!std::isfinite(weight) || weight < 0.0) {
        parse_fail(source_name, line_no,
                   detail::cat("weight must be a non-negative finite real, got '", tokens[0], "'"));
      }
      first_member = 1;
    }

    if (first_member >= tokens.size()) {
      parse_fail(source_name, line_no, "hyperedge has no members");
    }

    members.clear();
    for (size_t t = first_member; t < tokens.size(); ++t) {
      std::string_view tok = tokens[t];
      uint64_t id = 0;
      const char* begin = tok.data();
      const char* end = begin + tok.size();
      auto [ptr, ec] = std::from_chars(begin, end, id);
      if (ec != std::errc{} || ptr != end) {
        parse_fail(source_name, line_no,
                   detail::cat("'", tok, "' is not a non-negative integer vertex id"));
      }
      if (id > kMaxRawId) {
        parse_fail(source_name, line_no, detail::cat("vertex id ", id, " exceeds 2^63-1"));
      }
      members.push_back(id);
    }
    builder.add_hyperedge(std::span<const uint64_t>(members), weight);
  }
  return builder.build();
}

std::string serialize_hyperedge_list(const Hypergraph& h) {
  std::string out;
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    double w = h.weight_at(e);
    if (w != 1.0) {
      out += "w=";
      out += format_double(w);
      out += ' ';
    }
    auto row = h.members_at(e);
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(h.vertex_id(row[i]).raw);
    }
    out += '\n';
  }
  return out;
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(detail::cat("cannot open '", path, "'"));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hyperedge_list(buffer.str(), path);
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(detail::cat("cannot open '", path, "' for writing"));
  out << serialize_hyperedge_list(h);
}

namespace {

std::ofstream open_tsv(const std::string& path, std::string_view header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(detail::cat("cannot open '", path, "' for writing"));
  out << header << '\n';
  return out;
}

std::string format_hop(double v) {
  return std::isinf(v) ? "inf" : format_double(v);
}

}  // namespace

void write_rank_tsv(const std::string& path, const Hypergraph& h, const PageRankResult& r) {
  auto out = open_tsv(path, "kind\tid\trank");
  for (uint32_t v = 0; v < h.num_vertices(); ++v) {
    out << "vertex\t" << h.vertex_id(v).raw << '\t' << format_double(r.vertex_rank[v]) << '\n';
  }
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    out << "hyperedge\t" << h.hyperedge_id(e).raw << '\t' << format_double(r.hyperedge_rank[e])
        << '\n';
  }
}

void write_rank_entropy_tsv(const std::string& path, const Hypergraph& h,
                            const PageRankEntropyResult& r) {
  auto out = open_tsv(path, "kind\tid\trank\tentropy");
  for (uint32_t v = 0; v < h.num_vertices(); ++v) {
    out << "vertex\t" << h.vertex_id(v).raw << '\t' << format_double(r.vertex_rank[v]) << "\t\n";
  }
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    out << "hyperedge\t" << h.hyperedge_id(e).raw << '\t' << format_double(r.hyperedge_rank[e])
        << '\t' << format_double(r.hyperedge_entropy[e]) << '\n';
  }
}

void write_label_tsv(const std::string& path, const Hypergraph& h,
                     const LabelPropagationResult& r) {
  auto out = open_tsv(path, "kind\tid\tlabel");
  for (uint32_t v = 0; v < h.num_vertices(); ++v) {
    out << "vertex\t" << h.vertex_id(v).raw << '\t' << r.vertex_label[v] << '\n';
  }
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    out << "hyperedge\t" << h.hyperedge_id(e).raw << '\t' << r.hyperedge_label[e] << '\n';
  }
}

void write_hop_tsv(const std::string& path, const Hypergraph& h, const ShortestPathsResult& r) {
  auto out = open_tsv(path, "kind\tid\thops");
  for (uint32_t v = 0; v < h.num_vertices(); ++v) {
    out << "vertex\t" << h.vertex_id(v).raw << '\t' << format_hop(r.vertex_hops[v]) << '\n';
  }
  for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
    out << "hyperedge\t" << h.hyperedge_id(e).raw << '\t' << format_hop(r.hyperedge_hops[e])
        << '\n';
  }
}

}  // namespace hyper

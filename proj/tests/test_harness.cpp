#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hyper/generate.hpp"
#include "hyper/io.hpp"

using namespace hyper;
using test_support::sample_hypergraph;
using test_support::sample_hypergraph_text;

namespace {

bool same_structure(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_hyperedges() != b.num_hyperedges()) {
    return false;
  }
  for (uint32_t e = 0; e < a.num_hyperedges(); ++e) {
    if (a.hyperedge_id(e) != b.hyperedge_id(e)) return false;
    if (a.weight_at(e) != b.weight_at(e)) return false;
    if (a.members(a.hyperedge_id(e)) != b.members(b.hyperedge_id(e))) return false;
  }
  for (uint32_t v = 0; v < a.num_vertices(); ++v) {
    if (a.vertex_id(v) != b.vertex_id(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parsing the plain hyperedge list") {
  Hypergraph h = parse_hyperedge_list(sample_hypergraph_text());
  CHECK(same_structure(h, sample_hypergraph()));
}

TEST_CASE("weights, comments and blank lines") {
  const char* text =
      "# a header comment\n"
      "w=2.5 7 8\n"
      "\n"
      "   \n"
      "9\n"
      "#trailing note\n";
  Hypergraph h = parse_hyperedge_list(text);
  CHECK(h.num_hyperedges() == 2);
  CHECK(h.weight(HyperedgeId{0}) == 2.5);
  CHECK(h.members(HyperedgeId{0}) == std::vector<VertexId>{VertexId{7}, VertexId{8}});
  CHECK(h.weight(HyperedgeId{1}) == 1.0);
  CHECK(h.members(HyperedgeId{1}) == std::vector<VertexId>{VertexId{9}});
}

TEST_CASE("parse failures carry the source name and line number") {
  CHECK_THROWS_WITH_AS(parse_hyperedge_list("1 2\nw=abc 3\n", "input.hgr"),
                       doctest::Contains("input.hgr:2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_hyperedge_list("w=1.5\n"), doctest::Contains("no member"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_hyperedge_list("1 two 3\n"),
                       doctest::Contains("'two' is not a non-negative integer vertex id"),
                       ParseError);
  CHECK_THROWS_AS(parse_hyperedge_list("1 -4\n"), ParseError);
  CHECK_THROWS_AS(parse_hyperedge_list("w=-2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hyperedge_list("w=inf 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hyperedge_list("1 2.5\n"), ParseError);
  // 2^63 is one past the largest usable id.
  CHECK_THROWS_AS(parse_hyperedge_list("9223372036854775808\n"), ParseError);
  // Comments and blanks still advance the reported line number.
  CHECK_THROWS_WITH_AS(parse_hyperedge_list("# ok\n\n1 bad\n"), doctest::Contains(":3"),
                       ParseError);
}

TEST_CASE("serialization emits weights only when they matter") {
  HypergraphBuilder b;
  b.add_hyperedge({3, 1, 2});
  b.add_hyperedge({4, 5}, 0.125);
  Hypergraph h = b.build();
  CHECK(serialize_hyperedge_list(h) == "3 1 2\nw=0.125 4 5\n");
}

TEST_CASE("parse of serialize reproduces the graph") {
  SUBCASE("the sample graph") {
    Hypergraph h = sample_hypergraph();
    CHECK(same_structure(parse_hyperedge_list(serialize_hyperedge_list(h)), h));
  }
  SUBCASE("random graphs with awkward weights") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
      GeneratorConfig cfg;
      cfg.num_vertices = 20;
      cfg.num_hyperedges = 15;
      cfg.min_cardinality = 1;
      cfg.max_cardinality = 5;
      cfg.weight_min = 0.001;
      cfg.weight_max = 9.75;
      cfg.seed = seed;
      Hypergraph h = generate_hypergraph(cfg).graph;
      Hypergraph back = parse_hyperedge_list(serialize_hyperedge_list(h));
      // Isolated vertices do not survive the text format; compare hyperedges.
      REQUIRE(back.num_hyperedges() == h.num_hyperedges());
      for (uint32_t e = 0; e < h.num_hyperedges(); ++e) {
        CHECK(back.weight_at(e) == h.weight_at(e));  // shortest round-trip is exact
        CHECK(back.members(back.hyperedge_id(e)) == h.members(h.hyperedge_id(e)));
      }
    }
  }
}

TEST_CASE("save and load through a file") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "hyper_io_roundtrip.hgr";
  Hypergraph h = sample_hypergraph();
  save_hypergraph(h, path.string());
  Hypergraph back = load_hypergraph(path.string());
  CHECK(same_structure(back, h));
  fs::remove(path);
  CHECK_THROWS_AS(load_hypergraph((fs::temp_directory_path() / "missing.hgr").string()), Error);
}

TEST_CASE("result tables") {
  namespace fs = std::filesystem;
  Hypergraph h = sample_hypergraph();
  auto a = random_cut(h, PartitionConfig{}, CutMode::VertexCut);
  fs::path path = fs::temp_directory_path() / "hyper_ranks.tsv";

  auto r = page_rank(h, a, PageRankConfig{});
  write_rank_tsv(path.string(), h, r);
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "kind\tid\trank");
  size_t vertex_rows = 0, hyperedge_rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("vertex\t", 0) == 0) ++vertex_rows;
    if (line.rfind("hyperedge\t", 0) == 0) ++hyperedge_rows;
  }
  CHECK(vertex_rows == h.num_vertices());
  CHECK(hyperedge_rows == h.num_hyperedges());
  in.close();
  fs::remove(path);
}

TEST_CASE("the generator is deterministic and honors its bounds") {
  GeneratorConfig cfg;
  cfg.num_vertices = 30;
  cfg.num_hyperedges = 25;
  cfg.min_cardinality = 2;
  cfg.max_cardinality = 6;
  cfg.weight_min = 0.5;
  cfg.weight_max = 2.0;
  cfg.seed = 99;

  auto first = generate_hypergraph(cfg);
  auto second = generate_hypergraph(cfg);
  CHECK(serialize_hyperedge_list(first.graph) == serialize_hyperedge_list(second.graph));

  cfg.seed = 100;
  auto third = generate_hypergraph(cfg);
  CHECK(serialize_hyperedge_list(first.graph) != serialize_hyperedge_list(third.graph));

  const Hypergraph& g = first.graph;
  CHECK(g.num_vertices() == 30);  // every id exists, sampled or not
  CHECK(g.num_hyperedges() == 25);
  CHECK(g.duplicate_member_count() == 0);  // members are drawn distinct
  for (uint32_t e = 0; e < g.num_hyperedges(); ++e) {
    CHECK(g.cardinality_at(e) >= 2);
    CHECK(g.cardinality_at(e) <= 6);
    CHECK(g.weight_at(e) >= 0.5);
    CHECK(g.weight_at(e) <= 2.0);
    std::set<uint64_t> distinct;
    for (VertexId v : g.members(g.hyperedge_id(e))) distinct.insert(v.raw);
    CHECK(distinct.size() == g.cardinality_at(e));
  }
  CHECK(first.realized_max_cardinality == g.max_cardinality());
  CHECK(first.realized_max_degree == g.max_degree());
}

TEST_CASE("a fixed cardinality interval pins the edge count") {
  GeneratorConfig cfg;
  cfg.num_vertices = 50;
  cfg.num_hyperedges = 40;
  cfg.min_cardinality = 5;
  cfg.max_cardinality = 5;
  cfg.seed = 7;
  auto out = generate_hypergraph(cfg);
  CHECK(out.graph.num_bipartite_edges() == 200);
  CHECK(out.graph.max_cardinality() == 5);
}

TEST_CASE("generator configuration is validated") {
  GeneratorConfig cfg;
  cfg.num_vertices = 0;
  cfg.num_hyperedges = 1;
  CHECK_THROWS_AS(generate_hypergraph(cfg), ConfigError);

  cfg.num_vertices = 10;
  cfg.min_cardinality = 3;
  cfg.max_cardinality = 2;
  CHECK_THROWS_AS(generate_hypergraph(cfg), ConfigError);

  cfg.min_cardinality = 1;
  cfg.max_cardinality = 11;  // more members than vertices exist
  CHECK_THROWS_AS(generate_hypergraph(cfg), ConfigError);

  cfg.max_cardinality = 2;
  cfg.weight_min = 2.0;
  cfg.weight_max = 1.0;
  CHECK_THROWS_AS(generate_hypergraph(cfg), ConfigError);
}

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyper/algorithms.hpp"
#include "hyper/clique.hpp"
#include "hyper/io.hpp"
#include "hyper/partition.hpp"
#include "hyper/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CommonOpts {
  std::string input;
  std::string strategy = "rvc";
  uint32_t parts = 1;
  uint32_t cutoff = 100;
  unsigned threads = 1;
  uint64_t seed = 0;
  std::string out;
};

hyper::PartitionConfig partition_config(const CommonOpts& o) {
  hyper::PartitionConfig cfg;
  cfg.num_parts = o.parts;
  cfg.degree_cutoff = o.cutoff;
  cfg.seed = o.seed;
  return cfg;
}

nlohmann::json input_summary(const hyper::Hypergraph& h) {
  return {{"vertices", h.num_vertices()},
          {"hyperedges", h.num_hyperedges()},
          {"bipartite_edges", h.num_bipartite_edges()},
          {"max_degree", h.max_degree()},
          {"max_cardinality", h.max_cardinality()},
          {"duplicate_members", h.duplicate_member_count()}};
}

nlohmann::json partition_summary(const hyper::Hypergraph& h, const hyper::PartitionAssignment& a,
                                 const std::string& strategy, double millis) {
  hyper::PartitionStats s = hyper::partition_stats(h, a);
  return {{"strategy", strategy},
          {"parts", a.num_parts()},
          {"replication_factor_vertices", s.replication_factor_vertices},
          {"replication_factor_hyperedges", s.replication_factor_hyperedges},
          {"edge_balance", s.edge_balance},
          {"per_partition_edges", s.per_partition_edges},
          {"millis", millis}};
}

int run_stats(const std::string& input, const std::string& representation, size_t clique_cap) {
  hyper::Hypergraph h = hyper::load_hypergraph(input);
  std::cout << "vertices: " << h.num_vertices() << '\n'
            << "hyperedges: " << h.num_hyperedges() << '\n'
            << "max_degree: " << h.max_degree() << '\n'
            << "max_cardinality: " << h.max_cardinality() << '\n'
            << "bipartite_edges: " << h.num_bipartite_edges() << '\n'
            << "duplicate_members: " << h.duplicate_member_count() << '\n';
  if (representation == "clique") {
    hyper::CliqueEdgeCount c = hyper::count_clique_edges(h, clique_cap);
    if (c.capped) {
      std::cout << "clique_edges: >" << clique_cap << " (counting stopped at the cap)\n";
    } else {
      std::cout << "clique_edges: " << c.count << '\n';
    }
  }
  return 0;
}

int run_partition(const CommonOpts& o) {
  auto strategy = hyper::parse_strategy(o.strategy);
  if (!strategy) {
    std::cerr << "error: unknown strategy '" << o.strategy << "'\n";
    return 2;
  }
  hyper::Hypergraph h = hyper::load_hypergraph(o.input);
  auto t0 = Clock::now();
  hyper::PartitionAssignment a = hyper::run_strategy(h, partition_config(o), *strategy);
  double partition_ms = ms_since(t0);

  nlohmann::json doc = {{"input", input_summary(h)},
                        {"partition", partition_summary(h, a, o.strategy, partition_ms)}};
  std::cout << doc.dump(2) << '\n';
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    std::ofstream f(std::filesystem::path(o.out) / "partition_report.json");
    f << doc.dump(2) << '\n';
  }
  return 0;
}

struct RunOpts : CommonOpts {
  std::string algorithm;
  std::string representation = "bipartite";
  uint32_t max_iters = 30;
  double alpha = 0.15;
  std::vector<uint64_t> sources;
};

int run_algorithm(const RunOpts& o) {
  auto strategy = hyper::parse_strategy(o.strategy);
  if (!strategy) {
    std::cerr << "error: unknown strategy '" << o.strategy << "'\n";
    return 2;
  }
  const bool clique = o.representation == "clique";
  if (clique && o.algorithm != "pagerank") {
    std::cerr << "error: --representation clique is only supported for pagerank;"
              << " the other algorithms are defined on the bipartite structure\n";
    return 2;
  }
  if (o.algorithm == "sssp" && o.sources.empty()) {
    std::cerr << "error: --algorithm sssp requires at least one --source vertex\n";
    return 2;
  }

  auto total_start = Clock::now();
  auto t0 = Clock::now();
  hyper::Hypergraph loaded = hyper::load_hypergraph(o.input);
  double load_ms = ms_since(t0);

  double convert_ms = 0.0;
  hyper::Hypergraph graph;
  if (clique) {
    t0 = Clock::now();
    graph = hyper::clique_as_hypergraph(loaded);
    convert_ms = ms_since(t0);
  } else {
    graph = std::move(loaded);
  }

  t0 = Clock::now();
  hyper::PartitionAssignment a = hyper::run_strategy(graph, partition_config(o), *strategy);
  double partition_ms = ms_since(t0);

  nlohmann::json warnings = nlohmann::json::object();
  if (graph.duplicate_member_count() > 0) {
    warnings["duplicate_members"] = graph.duplicate_member_count();
  }

  hyper::RunReport report;
  std::string results_path;
  std::optional<std::filesystem::path> out_dir;
  if (!o.out.empty()) {
    out_dir = std::filesystem::path(o.out);
    std::filesystem::create_directories(*out_dir);
  }
  auto tsv_path = [&](const char* name) {
    return out_dir ? (*out_dir / name).string() : std::string{};
  };

  if (o.algorithm == "pagerank") {
    hyper::PageRankConfig cfg{o.alpha, o.max_iters};
    auto r = hyper::page_rank(graph, a, cfg, o.threads);
    report = r.report;
    if (r.excluded_vertices > 0) {
      warnings["excluded_degree_zero_vertices"] = r.excluded_vertices;
      std::cerr << "warning: " << r.excluded_vertices
                << " vertices have no incident hyperedge and keep their initial rank\n";
    }
    if (out_dir) {
      results_path = tsv_path("results.tsv");
      hyper::write_rank_tsv(results_path, graph, r);
    }
  } else if (o.algorithm == "pagerank-entropy") {
    hyper::PageRankConfig cfg{o.alpha, o.max_iters};
    auto r = hyper::page_rank_entropy(graph, a, cfg, o.threads);
    report = r.report;
    if (r.excluded_vertices > 0) {
      warnings["excluded_degree_zero_vertices"] = r.excluded_vertices;
      std::cerr << "warning: " << r.excluded_vertices
                << " vertices have no incident hyperedge and keep their initial rank\n";
    }
    if (out_dir) {
      results_path = tsv_path("results.tsv");
      hyper::write_rank_entropy_tsv(results_path, graph, r);
    }
  } else if (o.algorithm == "labelprop") {
    auto r = hyper::label_propagation(graph, a, o.max_iters, o.threads);
    report = r.report;
    if (out_dir) {
      results_path = tsv_path("results.tsv");
      hyper::write_label_tsv(results_path, graph, r);
    }
  } else if (o.algorithm == "sssp") {
    std::vector<hyper::VertexId> sources;
    sources.reserve(o.sources.size());
    for (uint64_t s : o.sources) sources.push_back(hyper::VertexId{s});
    auto r = hyper::shortest_paths(graph, a, sources, o.max_iters, o.threads);
    report = r.report;
    if (out_dir) {
      results_path = tsv_path("results.tsv");
      hyper::write_hop_tsv(results_path, graph, r);
    }
  } else {
    std::cerr << "error: unknown algorithm '" << o.algorithm << "'\n";
    return 2;
  }

  nlohmann::json doc = {
      {"config",
       {{"input", o.input},
        {"algorithm", o.algorithm},
        {"strategy", o.strategy},
        {"parts", o.parts},
        {"cutoff", o.cutoff},
        {"max_iters", o.max_iters},
        {"alpha", o.alpha},
        {"sources", o.sources},
        {"representation", o.representation},
        {"threads", o.threads},
        {"seed", o.seed}}},
      {"input", input_summary(graph)},
      {"partition", partition_summary(graph, a, o.strategy, partition_ms)},
      {"execution", nlohmann::json::parse(hyper::to_json_string(report))},
      {"warnings", warnings},
      {"timing_ms",
       {{"load", load_ms},
        {"convert", convert_ms},
        {"partition", partition_ms},
        {"execute", report.execute_millis},
        {"total", ms_since(total_start)}}},
  };
  if (!results_path.empty()) doc["results_tsv"] = results_path;

  std::cout << doc.dump(2) << '\n';
  if (out_dir) {
    std::ofstream f(*out_dir / "report.json");
    f << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph processing engine"};
  app.require_subcommand(1);

  // ---- stats ----
  std::string stats_input;
  std::string stats_repr = "bipartite";
  size_t clique_cap = 0;
  CLI::App* stats = app.add_subcommand("stats", "Structural counts of a hyperedge-list file");
  stats->add_option("--input", stats_input, "hyperedge-list file")->required();
  stats->add_option("--representation", stats_repr, "bipartite|clique (clique adds pair counts)")
      ->check(CLI::IsMember({"bipartite", "clique"}));
  stats->add_option("--clique-cap", clique_cap,
                    "stop counting clique edges past this many distinct pairs (0 = unlimited)");

  // ---- partition ----
  CommonOpts popts;
  CLI::App* partition = app.add_subcommand("partition", "Partition a hypergraph and report stats");
  partition->add_option("--input", popts.input, "hyperedge-list file")->required();
  partition->add_option("--strategy", popts.strategy,
                        "rvc|rhec|rbc|hvc|hhec|gvc|ghec (default rvc)")
      ->check(CLI::IsMember(hyper::all_strategy_names()));
  partition->add_option("--parts", popts.parts, "number of partitions (default 1)");
  partition->add_option("--cutoff", popts.cutoff, "hybrid degree/cardinality cutoff (default 100)");
  partition->add_option("--seed", popts.seed, "reserved for randomized tie-breaking");
  partition->add_option("--out", popts.out, "directory for partition_report.json");

  // ---- run ----
  RunOpts ropts;
  CLI::App* run = app.add_subcommand("run", "Run an algorithm over a partitioned hypergraph");
  run->add_option("--input", ropts.input, "hyperedge-list file")->required();
  run->add_option("--algorithm", ropts.algorithm, "pagerank|pagerank-entropy|labelprop|sssp")
      ->required()
      ->check(CLI::IsMember({"pagerank", "pagerank-entropy", "labelprop", "sssp"}));
  run->add_option("--strategy", ropts.strategy, "rvc|rhec|rbc|hvc|hhec|gvc|ghec (default rvc)")
      ->check(CLI::IsMember(hyper::all_strategy_names()));
  run->add_option("--parts", ropts.parts, "number of partitions (default 1)");
  run->add_option("--cutoff", ropts.cutoff, "hybrid degree/cardinality cutoff (default 100)");
  run->add_option("--max-iters", ropts.max_iters, "round bound (default 30)");
  run->add_option("--alpha", ropts.alpha, "rank restart probability (default 0.15)");
  run->add_option("--source", ropts.sources, "source vertex id (repeatable; sssp only)");
  run->add_option("--representation", ropts.representation,
                  "bipartite|clique (clique: pagerank only)")
      ->check(CLI::IsMember({"bipartite", "clique"}));
  run->add_option("--threads", ropts.threads, "worker threads (default 1, 0 = hardware)");
  run->add_option("--seed", ropts.seed, "reserved for randomized tie-breaking");
  run->add_option("--out", ropts.out, "directory for report.json and results.tsv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats->parsed()) return run_stats(stats_input, stats_repr, clique_cap);
    if (partition->parsed()) return run_partition(popts);
    if (run->parsed()) return run_algorithm(ropts);
  } catch (const hyper::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

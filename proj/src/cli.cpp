#include "spg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spg/report.hpp"

namespace spg {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Divergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DirectedGraph load_graph(const std::string& path) {
  try {
    return load_edge_list_file(path);
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

VertexId vertex_of(const DirectedGraph& g, Label label, const char* role) {
  const auto v = g.index_of(label);
  if (!v) throw UsageError(std::string(role) + " " + std::to_string(label) + " is not a vertex of the graph");
  return *v;
}

Query query_of(const DirectedGraph& g, Label s, Label t, unsigned k) {
  if (s == t) throw UsageError("source and target must differ");
  try {
    return make_query(g, vertex_of(g, s, "source"), vertex_of(g, t, "target"), k);
  } catch (const InvalidQuery& e) {
    throw UsageError(e.what());
  }
}

std::vector<Query> sample(const DirectedGraph& g, unsigned k, std::size_t n, std::uint64_t seed) {
  try {
    return sample_queries(g, k, n, seed);
  } catch (const InsufficientQueries& e) {
    throw UsageError(e.what());
  } catch (const InvalidQuery& e) {
    throw UsageError(e.what());
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

struct EngineFlags {
  bool no_pruning = false;
  bool no_ordering = false;
  bool no_boundary_cap = false;
  std::size_t path_limit = kDefaultPathLimit;

  void add_to(CLI::App& app) {
    app.add_flag("--no-pruning", no_pruning, "Disable forward-looking pruning");
    app.add_flag("--no-ordering", no_ordering, "Disable neighbour ordering in verification");
    app.add_flag("--no-boundary-cap", no_boundary_cap, "Keep every In_D / Out_A entry");
    app.add_option("--path-limit", path_limit, "Oracle path-count limit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  RunOptions options() const {
    RunOptions o;
    o.engine.pruning = !no_pruning;
    o.engine.ordering = !no_ordering;
    o.engine.boundary_cap = !no_boundary_cap;
    o.path_limit = path_limit;
    return o;
  }
};

struct QueryCommand {
  std::string graph;
  Label source = 0;
  Label target = 0;
  unsigned k = 0;
  std::string mode = "eve";
  std::string format = "edges";
  std::uint64_t seed = 0;
  EngineFlags engine;

  int run(std::ostream& out) const {
    const DirectedGraph g = load_graph(graph);
    const Query q = query_of(g, source, target, k);
    const Mode m = parse_mode(mode);
    if (format == "paths") {
      if (m != Mode::oracle) throw UsageError("--format paths requires --mode oracle");
      write_paths(out, g, enumerate_simple_paths(g, q, engine.path_limit));
      return kExitOk;
    }
    const QueryRecord r = run_query(g, q, m, engine.options());
    if (r.status == "overflow") throw EnumerationOverflow(engine.path_limit);
    if (!r.ok()) throw std::runtime_error(r.error);
    if (format == "edges") {
      write_edges(out, g, r.edges);
    } else if (format == "dot") {
      write_dot(out, g, q, r.edges);
    } else {
      nlohmann::json j;
      j["record"] = record_json(g, r);
      j["edges"] = edges_json(g, r.edges);
      out << j.dump(2) << '\n';
    }
    return kExitOk;
  }
};

struct BatchCommand {
  std::string graph;
  std::string queries;
  std::size_t gen = 0;
  unsigned k = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> modes{"eve"};
  std::string out_dir;
  int parallel = 1;
  EngineFlags engine;

  int run(std::ostream& out) const {
    const DirectedGraph g = load_graph(graph);
    std::vector<Query> qs;
    if (!queries.empty()) {
      std::ifstream in(queries);
      if (!in) throw IoError("cannot open query file '" + queries + "'");
      try {
        qs = read_queries(in, g);
      } catch (const ParseError& e) {
        throw IoError(queries + ": " + e.what());
      }
    } else {
      if (gen == 0 || k == 0) throw UsageError("batch needs --queries FILE or --gen N --k K");
      qs = sample(g, k, gen, seed);
    }

    std::vector<Mode> ms;
    for (const auto& name : modes) {
      const Mode m = parse_mode(name);
      if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
    }

    const RunOptions options = engine.options();
    std::vector<QueryRecord> records(qs.size() * ms.size());
    const auto total = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic) num_threads(parallel)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto qi = static_cast<std::size_t>(i) / ms.size();
      const auto mi = static_cast<std::size_t>(i) % ms.size();
      records[static_cast<std::size_t>(i)] = run_query(g, qs[qi], ms[mi], options);
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir + "': " + ec.message());
    {
      auto tsv = open_output(fs::path(out_dir) / "queries.tsv");
      write_queries(tsv, g, qs);
    }
    for (Mode m : ms) {
      fs::create_directories(fs::path(out_dir) / to_string(m), ec);
      if (ec) throw IoError("cannot create mode directory: " + ec.message());
    }

    nlohmann::json report;
    report["graph"] = {{"path", graph}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    report["modes"] = modes_json(ms);
    report["query_count"] = qs.size();
    report["records"] = nlohmann::json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      auto j = record_json(g, r);
      j["index"] = i / ms.size();
      report["records"].push_back(std::move(j));
      auto file = open_output(fs::path(out_dir) / to_string(r.mode) /
                              ("q" + std::to_string(i / ms.size()) + ".edges"));
      if (r.ok()) write_edges(file, g, r.edges);
    }

    report["aggregate"] = nlohmann::json::object();
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      std::vector<QueryRecord> of_mode;
      for (std::size_t qi = 0; qi < qs.size(); ++qi) of_mode.push_back(records[qi * ms.size() + mi]);
      report["aggregate"][to_string(ms[mi])] = aggregate_json(of_mode);
    }

    bool diverged = false;
    const auto eve = std::find(ms.begin(), ms.end(), Mode::eve);
    const auto oracle = std::find(ms.begin(), ms.end(), Mode::oracle);
    if (eve != ms.end() && oracle != ms.end()) {
      const auto ei = static_cast<std::size_t>(eve - ms.begin());
      const auto oi = static_cast<std::size_t>(oracle - ms.begin());
      auto list = nlohmann::json::array();
      for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const auto& a = records[qi * ms.size() + ei];
        const auto& b = records[qi * ms.size() + oi];
        nlohmann::json entry{{"index", qi}};
        if (a.ok() && b.ok()) {
          entry["equal"] = a.edges == b.edges;
          diverged = diverged || a.edges != b.edges;
        } else {
          entry["equal"] = nullptr;
        }
        list.push_back(std::move(entry));
      }
      report["equivalence"] = std::move(list);
    }

    auto file = open_output(fs::path(out_dir) / "report.json");
    file << report.dump(2) << '\n';
    if (!file) throw IoError("cannot write report");

    std::size_t failures = 0;
    for (const auto& r : records) failures += r.ok() ? 0 : 1;
    out << qs.size() << " queries, " << ms.size() << " modes, " << failures
        << " failures -> " << (fs::path(out_dir) / "report.json").string() << '\n';
    if (diverged) throw Divergence("eve and oracle results diverge; see report.json");
    return kExitOk;
  }

  static nlohmann::json modes_json(const std::vector<Mode>& ms) {
    auto j = nlohmann::json::array();
    for (Mode m : ms) j.push_back(to_string(m));
    return j;
  }
};

struct GenQueriesCommand {
  std::string graph;
  unsigned k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;

  int run(std::ostream& out) const {
    const DirectedGraph g = load_graph(graph);
    const auto qs = sample(g, k, n, seed);
    if (out_path.empty()) {
      write_queries(out, g, qs);
    } else {
      auto file = open_output(out_path);
      write_queries(file, g, qs);
    }
    return kExitOk;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-hop-constrained s-t simple path graph queries"};
  app.require_subcommand(1);

  QueryCommand query;
  auto* q = app.add_subcommand("query", "Answer a single query");
  q->add_option("--graph", query.graph, "Edge-list file")->required();
  q->add_option("--source", query.source, "Source vertex label")->required();
  q->add_option("--target", query.target, "Target vertex label")->required();
  q->add_option("--k", query.k, "Hop constraint")->required();
  q->add_option("--mode", query.mode)->check(CLI::IsMember({"eve", "upper", "oracle"}))->capture_default_str();
  q->add_option("--format", query.format)
      ->check(CLI::IsMember({"edges", "dot", "json", "paths"}))
      ->capture_default_str();
  q->add_option("--seed", query.seed, "Accepted for symmetry with batch; a single query draws nothing");
  query.engine.add_to(*q);

  BatchCommand batch;
  auto* b = app.add_subcommand("batch", "Run many queries and write a report");
  b->add_option("--graph", batch.graph, "Edge-list file")->required();
  auto* queries_opt = b->add_option("--queries", batch.queries, "TSV query file");
  auto* gen_opt = b->add_option("--gen", batch.gen, "Sample this many queries instead");
  queries_opt->excludes(gen_opt);
  b->add_option("--k", batch.k, "Hop constraint for --gen");
  b->add_option("--seed", batch.seed, "Seed for --gen")->capture_default_str();
  b->add_option("--mode", batch.modes, "Comma-separated modes")
      ->delimiter(',')
      ->check(CLI::IsMember({"eve", "upper", "oracle"}))
      ->capture_default_str();
  b->add_option("--out", batch.out_dir, "Output directory")->required();
  b->add_option("--parallel", batch.parallel, "Worker threads over queries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  batch.engine.add_to(*b);

  GenQueriesCommand gen;
  auto* gq = app.add_subcommand("gen-queries", "Sample k-hop-reachable query pairs");
  gq->add_option("--graph", gen.graph, "Edge-list file")->required();
  gq->add_option("--k", gen.k, "Hop constraint")->required();
  gq->add_option("--n", gen.n, "Number of queries")->required();
  gq->add_option("--seed", gen.seed)->required();
  gq->add_option("--out", gen.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (q->parsed()) return query.run(out);
    if (b->parsed()) return batch.run(out);
    return gen.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const EnumerationOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const Divergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace spg

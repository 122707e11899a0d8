#include "spg/report.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

namespace spg {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::eve: return "eve";
    case Mode::upper: return "upper";
    case Mode::oracle: return "oracle";
  }
  return "eve";
}

Mode parse_mode(const std::string& name) {
  if (name == "eve") return Mode::eve;
  if (name == "upper") return Mode::upper;
  if (name == "oracle") return Mode::oracle;
  throw std::invalid_argument("unknown mode: " + name);
}

namespace {

LabelCounts counts_of(const UpperBoundGraph& ub) {
  LabelCounts c;
  c.candidate = ub.candidates().size();
  c.failing = ub.count(EdgeLabel::failing);
  c.undetermined = ub.count(EdgeLabel::undetermined);
  c.definite = ub.count(EdgeLabel::definite);
  return c;
}

}  // namespace

QueryRecord run_query(const DirectedGraph& g, const Query& q, Mode mode,
                      const RunOptions& options) {
  QueryRecord r;
  r.query = q;
  r.mode = mode;
  try {
    switch (mode) {
      case Mode::eve: {
        EveResult eve = run_eve(g, q, options.engine);
        r.labels = counts_of(eve.upper);
        r.labels->confirmed = eve.spg.stats.confirmed_edges;
        r.timings = eve.spg.stats.timings;
        r.metrics = compute_metrics(g, eve.spg, eve.upper);
        r.vertex_count = eve.spg.vertices.size();
        r.edges = std::move(eve.spg.edges);
        break;
      }
      case Mode::upper: {
        UpperBoundResult ub = run_upper_bound(g, q, options.engine);
        r.labels = counts_of(ub.upper);
        r.timings = ub.timings;
        auto spg = make_simple_path_graph(ub.upper.edges());
        r.vertex_count = spg.vertices.size();
        r.edges = std::move(spg.edges);
        break;
      }
      case Mode::oracle: {
        const auto start = std::chrono::steady_clock::now();
        auto spg = oracle_spg(g, q, options.path_limit);
        r.timings.total_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        r.vertex_count = spg.vertices.size();
        r.edges = std::move(spg.edges);
        break;
      }
    }
  } catch (const EnumerationOverflow& e) {
    r.status = "overflow";
    r.error = e.what();
  } catch (const std::exception& e) {
    r.status = "error";
    r.error = e.what();
  }
  return r;
}

void write_edges(std::ostream& out, const DirectedGraph& g, std::span<const Edge> edges) {
  for (const Edge& e : edges) out << g.label_of(e.from) << ' ' << g.label_of(e.to) << '\n';
}

void write_dot(std::ostream& out, const DirectedGraph& g, const Query& q,
               std::span<const Edge> edges) {
  out << "digraph spg {\n";
  out << "  " << g.label_of(q.source) << " [shape=box];\n";
  out << "  " << g.label_of(q.target) << " [shape=doublecircle];\n";
  for (const Edge& e : edges)
    out << "  " << g.label_of(e.from) << " -> " << g.label_of(e.to) << ";\n";
  out << "}\n";
}

nlohmann::json edges_json(const DirectedGraph& g, std::span<const Edge> edges) {
  auto list = nlohmann::json::array();
  for (const Edge& e : edges) list.push_back({g.label_of(e.from), g.label_of(e.to)});
  return list;
}

nlohmann::json record_json(const DirectedGraph& g, const QueryRecord& r) {
  nlohmann::json j;
  j["query"] = {{"source", g.label_of(r.query.source)},
                {"target", g.label_of(r.query.target)},
                {"k", r.query.k}};
  j["mode"] = to_string(r.mode);
  j["status"] = r.status;
  j["error"] = r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error);
  j["edge_count"] = r.edges.size();
  j["vertex_count"] = r.vertex_count;
  if (r.labels) {
    j["labels"] = {{"candidate", r.labels->candidate},
                   {"failing", r.labels->failing},
                   {"undetermined", r.labels->undetermined},
                   {"definite", r.labels->definite},
                   {"confirmed", r.labels->confirmed}};
  } else {
    j["labels"] = nullptr;
  }
  j["timings_ms"] = {{"distance", r.timings.distance_ms},
                     {"propagation", r.timings.propagation_ms},
                     {"labeling", r.timings.labeling_ms},
                     {"verification", r.timings.verification_ms},
                     {"total", r.timings.total_ms}};
  if (r.metrics) {
    j["metrics"] = {{"graph_edges", r.metrics->graph_edges},
                    {"spg_edges", r.metrics->spg_edges},
                    {"upper_edges", r.metrics->upper_edges},
                    {"coverage_ratio", r.metrics->coverage_ratio},
                    {"redundant_ratio", r.metrics->redundant_ratio
                                            ? nlohmann::json(*r.metrics->redundant_ratio)
                                            : nlohmann::json(nullptr)}};
  } else {
    j["metrics"] = nullptr;
  }
  return j;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

nlohmann::json aggregate_json(std::span<const QueryRecord> records) {
  std::vector<double> times;
  std::size_t failures = 0;
  double rc_sum = 0, rd_sum = 0;
  std::size_t rc_n = 0, rd_n = 0;
  for (const auto& r : records) {
    if (!r.ok()) {
      ++failures;
      continue;
    }
    times.push_back(r.timings.total_ms);
    if (r.metrics) {
      rc_sum += r.metrics->coverage_ratio;
      ++rc_n;
      if (r.metrics->redundant_ratio) {
        rd_sum += *r.metrics->redundant_ratio;
        ++rd_n;
      }
    }
  }
  nlohmann::json j;
  j["queries"] = records.size();
  j["failures"] = failures;
  double mean = 0, max = 0;
  for (double t : times) mean += t, max = std::max(max, t);
  if (!times.empty()) mean /= static_cast<double>(times.size());
  j["time_ms"] = {{"mean", mean}, {"median", median(times)}, {"max", max}};
  j["mean_coverage_ratio"] = rc_n ? nlohmann::json(rc_sum / static_cast<double>(rc_n))
                                  : nlohmann::json(nullptr);
  j["mean_redundant_ratio"] = rd_n ? nlohmann::json(rd_sum / static_cast<double>(rd_n))
                                   : nlohmann::json(nullptr);
  return j;
}

}  // namespace spg

#ifndef SPG_REPORT_HPP
#define SPG_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "spg/engine.hpp"
#include "spg/graph.hpp"
#include "spg/oracle.hpp"

namespace spg {

enum class Mode { eve, upper, oracle };

std::string to_string(Mode mode);
// Throws std::invalid_argument for anything but "eve", "upper", "oracle".
Mode parse_mode(const std::string& name);

struct LabelCounts {
  std::size_t candidate = 0;
  std::size_t failing = 0;
  std::size_t undetermined = 0;
  std::size_t definite = 0;
  std::size_t confirmed = 0;
};

/// The outcome of one query under one mode.
struct QueryRecord {
  Query query{};
  Mode mode = Mode::eve;
  std::string status = "ok";  // "ok", "overflow" or "error"
  std::string error;
  std::vector<Edge> edges;    // ascending
  std::size_t vertex_count = 0;
  std::optional<LabelCounts> labels;
  PhaseTimings timings;
  std::optional<Metrics> metrics;

  bool ok() const { return status == "ok"; }
};

struct RunOptions {
  EngineOptions engine;
  std::size_t path_limit = kDefaultPathLimit;
};

// Never throws for per-query failures; they land in status / error.
QueryRecord run_query(const DirectedGraph& g, const Query& q, Mode mode,
                      const RunOptions& options = {});

// Edge lines "u v" in external labels.
void write_edges(std::ostream& out, const DirectedGraph& g, std::span<const Edge> edges);
void write_dot(std::ostream& out, const DirectedGraph& g, const Query& q,
               std::span<const Edge> edges);

nlohmann::json record_json(const DirectedGraph& g, const QueryRecord& record);
nlohmann::json edges_json(const DirectedGraph& g, std::span<const Edge> edges);

// Per-mode aggregate over the records of that mode.
nlohmann::json aggregate_json(std::span<const QueryRecord> records);

double median(std::vector<double> values);

}  // namespace spg

#endif  // SPG_REPORT_HPP

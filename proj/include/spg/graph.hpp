#ifndef SPG_GRAPH_HPP
#define SPG_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spg {

using VertexId = std::uint32_t;
// External vertex label as read from an edge-list file. Must fit in 63 bits.
using Label = std::uint64_t;

inline constexpr unsigned kMaxHops = 255;

struct Edge {
  VertexId from;
  VertexId to;

  auto operator<=>(const Edge&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientQueries : public std::runtime_error {
 public:
  InsufficientQueries(std::size_t found, std::size_t requested);

  std::size_t found() const { return found_; }
  std::size_t requested() const { return requested_; }

 private:
  std::size_t found_;
  std::size_t requested_;
};

/// A hop-constrained s-t query over dense vertex indices.
struct Query {
  VertexId source;
  VertexId target;
  unsigned k;

  bool operator==(const Query&) const = default;
};

class DirectedGraph;

/// Throws InvalidQuery unless s != t, 1 <= k <= kMaxHops and both endpoints
/// are vertices of `g`.
Query make_query(const DirectedGraph& g, VertexId source, VertexId target,
                 unsigned k);

class GraphView;

/// Immutable directed graph in CSR form with both out- and in-adjacency.
///
/// Vertices are dense indices [0, vertex_count). External labels are kept
/// sorted, so internal index order coincides with external label order.
/// Self-loops and parallel edges never survive construction.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Vertices are exactly the endpoints of the retained edges.
  static DirectedGraph from_labeled_edges(
      std::vector<std::pair<Label, Label>> edges);

  // Identity labels; isolated vertices in [0, vertex_count) are kept.
  static DirectedGraph from_edges(VertexId vertex_count,
                                  std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }

  std::span<const VertexId> out(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const {
    return {in_targets_.data() + in_offsets_[v],
            in_targets_.data() + in_offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const;

  Label label_of(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> index_of(Label label) const;

  // All edges in (from, to) order.
  std::vector<Edge> edges() const;

  GraphView forward() const;

 private:
  static DirectedGraph build(std::vector<Label> labels,
                             std::vector<Edge> edges);

  std::vector<Label> labels_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> in_targets_;
};

/// Non-owning view of a DirectedGraph, optionally with every edge reversed.
class GraphView {
 public:
  GraphView(const DirectedGraph& g, bool reversed)
      : graph_(&g), reversed_(reversed) {}

  std::size_t vertex_count() const { return graph_->vertex_count(); }
  std::size_t edge_count() const { return graph_->edge_count(); }
  std::span<const VertexId> out(VertexId v) const {
    return reversed_ ? graph_->in(v) : graph_->out(v);
  }
  std::span<const VertexId> in(VertexId v) const {
    return reversed_ ? graph_->out(v) : graph_->in(v);
  }
  bool is_reversed() const { return reversed_; }
  const DirectedGraph& graph() const { return *graph_; }

  GraphView reversed() const { return GraphView(*graph_, !reversed_); }

 private:
  const DirectedGraph* graph_;
  bool reversed_;
};

inline GraphView DirectedGraph::forward() const { return GraphView(*this, false); }
inline GraphView reverse_view(const DirectedGraph& g) { return GraphView(g, true); }
inline GraphView reverse_view(const GraphView& view) { return view.reversed(); }

// Lines are "u v"; '#' and '%' start comments; blank lines are skipped.
DirectedGraph load_edge_list(std::istream& in);
DirectedGraph load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const DirectedGraph& g);

/// Draws `n` distinct (s,t) queries whose target is reachable from the source
/// within `k` hops. Each attempt picks a uniform source, runs a depth-k BFS
/// and picks a uniform reachable target; repeated pairs are discarded. Gives
/// up after `max_attempts` attempts (0 means 100 * n) and throws
/// InsufficientQueries.
std::vector<Query> sample_queries(const DirectedGraph& g, unsigned k,
                                  std::size_t n, std::uint64_t seed,
                                  std::size_t max_attempts = 0);

// Query files hold one "s\tt\tk" line per query, in external labels.
std::vector<Query> read_queries(std::istream& in, const DirectedGraph& g);
void write_queries(std::ostream& out, const DirectedGraph& g,
                   std::span<const Query> queries);

// Depth-bounded BFS; hops[v] is the distance from `source` or -1.
std::vector<int> bounded_bfs(const GraphView& view, VertexId source,
                             unsigned max_depth);

}  // namespace spg

#endif  // SPG_GRAPH_HPP

#ifndef SPG_VERIFY_HPP
#define SPG_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spg/graph.hpp"
#include "spg/labeling.hpp"

namespace spg {

struct PhaseTimings {
  double distance_ms = 0;
  double propagation_ms = 0;
  double labeling_ms = 0;
  double verification_ms = 0;
  double total_ms = 0;
};

struct SpgStats {
  std::size_t candidate_edges = 0;
  std::size_t failing_edges = 0;
  std::size_t undetermined_edges = 0;
  std::size_t definite_edges = 0;
  std::size_t confirmed_edges = 0;  // undetermined edges found to be in the answer
  std::size_t longest_witness = 0;  // most edges on any accepted q*
  PhaseTimings timings;
};

/// The answer: every edge lying on some s-t simple path of at most k edges.
struct SimplePathGraph {
  std::vector<Edge> edges;        // ascending
  std::vector<VertexId> vertices; // endpoints of `edges`, ascending
  SpgStats stats;
};

SimplePathGraph make_simple_path_graph(std::vector<Edge> edges);

/// Label-{1,2} adjacency in local ids, neighbour lists in search order.
struct SearchAdjacency {
  std::vector<std::uint32_t> out_offsets;
  std::vector<UpperBoundGraph::Arc> out_arcs;
  std::vector<std::uint32_t> in_offsets;
  std::vector<UpperBoundGraph::Arc> in_arcs;

  std::span<const UpperBoundGraph::Arc> out(std::uint32_t v) const {
    return {out_arcs.data() + out_offsets[v], out_arcs.data() + out_offsets[v + 1]};
  }
  std::span<const UpperBoundGraph::Arc> in(std::uint32_t v) const {
    return {in_arcs.data() + in_offsets[v], in_arcs.data() + in_offsets[v + 1]};
  }
};

// Adjacency of `ub` in its natural (ascending) order.
SearchAdjacency natural_adjacency(const UpperBoundGraph& ub);

// Out-neighbours by distance to the nearest arrival, arrivals among them by
// |Out_A| descending; in-neighbours likewise by distance from the nearest
// departure and |In_D|. Remaining ties keep ascending vertex order. With no
// departures or no arrivals the natural order is returned.
SearchAdjacency order_adjacency(const UpperBoundGraph& ub, const BoundaryIndex& b);

struct VerifyOptions {
  // Reorder neighbours before searching; only applied when k >= 6.
  bool ordering = true;
};

/// Starts from the definite edges and confirms undetermined edges by a
/// bounded DFS between departures and arrivals.
SimplePathGraph verify_undetermined(const UpperBoundGraph& ub,
                                    const BoundaryIndex& b,
                                    const VerifyOptions& options = {});

}  // namespace spg

#endif  // SPG_VERIFY_HPP

#ifndef SPG_ORACLE_HPP
#define SPG_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spg/essential.hpp"
#include "spg/graph.hpp"
#include "spg/labeling.hpp"
#include "spg/verify.hpp"

// Brute-force references: exhaustive path enumeration, direct
// essential-vertex sets, and evaluation metrics. None of this shares code
// with the propagation / labeling / verification pipeline.
namespace spg {

inline constexpr std::size_t kDefaultPathLimit = 10'000'000;

class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(std::size_t limit)
      : std::runtime_error("path enumeration exceeded " +
                           std::to_string(limit) + " paths"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

struct PathSet {
  std::vector<std::vector<VertexId>> paths;
};

// Calls `visit` for every s-t simple path with at most k edges, in DFS order
// over ascending neighbour lists. Throws EnumerationOverflow once more than
// `limit` paths have been produced. With `distance_pruning` a branch is cut
// as soon as a reverse-BFS lower bound shows t is out of reach; without it
// only the hop budget limits the search. Both produce the same paths.
void for_each_simple_path(
    const DirectedGraph& g, const Query& q,
    const std::function<void(std::span<const VertexId>)>& visit,
    std::size_t limit = kDefaultPathLimit, bool distance_pruning = true);

PathSet enumerate_simple_paths(const DirectedGraph& g, const Query& q,
                               std::size_t limit = kDefaultPathLimit,
                               bool distance_pruning = true);

SimplePathGraph oracle_spg(const PathSet& paths);

// Same union as oracle_spg(enumerate_simple_paths(g, q)) without keeping
// the paths.
SimplePathGraph oracle_spg(const DirectedGraph& g, const Query& q,
                           std::size_t limit = kDefaultPathLimit,
                           bool distance_pruning = true);

// Intersection of vertex sets over all simple paths of at most `layer` edges
// from s to `vertex` avoiding t (forward), or from `vertex` to t avoiding s
// (backward). nullopt when there is no such path.
std::optional<std::vector<VertexId>> brute_ev(const DirectedGraph& g,
                                              const Query& q, VertexId vertex,
                                              unsigned layer, Direction direction,
                                              std::size_t limit = kDefaultPathLimit);

// table[l][v] for every layer l in [0, max_layer] and vertex v, from a single
// exhaustive search.
using BruteEvTable = std::vector<std::vector<std::optional<std::vector<VertexId>>>>;
BruteEvTable brute_ev_table(const DirectedGraph& g, const Query& q,
                            unsigned max_layer, Direction direction,
                            std::size_t limit = kDefaultPathLimit);

struct Metrics {
  std::size_t graph_edges = 0;
  std::size_t spg_edges = 0;
  std::size_t upper_edges = 0;
  double coverage_ratio = 0;
  // Undefined when the answer is empty.
  std::optional<double> redundant_ratio;
};

Metrics compute_metrics(const DirectedGraph& g, const SimplePathGraph& spg,
                        const UpperBoundGraph& upper);
Metrics compute_metrics(std::size_t graph_edges, std::size_t spg_edges,
                        std::size_t upper_edges);

void write_paths(std::ostream& out, const DirectedGraph& g, const PathSet& paths);

}  // namespace spg

#endif  // SPG_ORACLE_HPP

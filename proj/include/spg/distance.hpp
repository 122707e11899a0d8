#ifndef SPG_DISTANCE_HPP
#define SPG_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

using Hops = std::uint16_t;
inline constexpr Hops kUnreached = 0xFFFF;

/// Per-query shortest hop distances from s and to t.
///
/// Entries are exact for every vertex y with Δ(s,y) + Δ(y,t) <= k. Other
/// entries are either kUnreached or an upper bound on the true distance.
struct DistanceField {
  Query query{};
  std::vector<Hops> from_source;
  std::vector<Hops> to_target;
  // Vertices with at least one finite entry, ascending.
  std::vector<VertexId> touched;

  bool within_budget(VertexId y) const {
    return from_source[y] != kUnreached && to_target[y] != kUnreached &&
           from_source[y] + to_target[y] <= static_cast<int>(query.k);
  }
};

// Grows BFS from s and reverse BFS from t, always expanding the smaller
// frontier (ties go forward) until the two depths add up to k, then finishes
// each side over the vertices the other side already reached.
DistanceField adaptive_bidirectional_distances(const DirectedGraph& g,
                                               const Query& q);

inline bool in_k_hop_subgraph(const DistanceField& d, VertexId u, VertexId v) {
  return d.from_source[u] != kUnreached && d.to_target[v] != kUnreached &&
         d.from_source[u] + 1 + d.to_target[v] <= static_cast<int>(d.query.k);
}

/// Edges (u,v) with Δ(s,u) + 1 + Δ(v,t) <= k, sorted by (u, v).
std::vector<Edge> k_hop_subgraph(const DirectedGraph& g, const DistanceField& d);

}  // namespace spg

#endif  // SPG_DISTANCE_HPP

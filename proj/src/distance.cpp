#include "spg/distance.hpp"

#include <algorithm>

namespace spg {

namespace {

struct Side {
  std::vector<Hops>* dist;
  GraphView view;
  std::vector<VertexId> frontier;
  unsigned depth = 0;
};

void expand(Side& side, std::vector<VertexId>& touched) {
  std::vector<VertexId> next;
  const Hops nd = static_cast<Hops>(side.depth + 1);
  for (VertexId x : side.frontier) {
    for (VertexId y : side.view.out(x)) {
      Hops& slot = (*side.dist)[y];
      if (slot != kUnreached) continue;
      slot = nd;
      next.push_back(y);
      touched.push_back(y);
    }
  }
  side.frontier.swap(next);
  ++side.depth;
}

// Continues BFS on `side` up to depth k, only entering vertices y whose
// opposite distance is known and satisfies depth(y) + other[y] <= k.
void finish(Side& side, const std::vector<Hops>& other, unsigned k,
            std::vector<VertexId>& touched) {
  std::vector<VertexId> next;
  while (!side.frontier.empty() && side.depth < k) {
    next.clear();
    const Hops nd = static_cast<Hops>(side.depth + 1);
    for (VertexId x : side.frontier) {
      for (VertexId y : side.view.out(x)) {
        Hops& slot = (*side.dist)[y];
        if (slot != kUnreached) continue;
        if (other[y] == kUnreached || nd + other[y] > static_cast<int>(k)) continue;
        slot = nd;
        next.push_back(y);
        touched.push_back(y);
      }
    }
    side.frontier.swap(next);
    ++side.depth;
  }
}

}  // namespace

DistanceField adaptive_bidirectional_distances(const DirectedGraph& g,
                                               const Query& q) {
  DistanceField d;
  d.query = q;
  d.from_source.assign(g.vertex_count(), kUnreached);
  d.to_target.assign(g.vertex_count(), kUnreached);
  d.from_source[q.source] = 0;
  d.to_target[q.target] = 0;
  d.touched = {q.source, q.target};

  Side fwd{&d.from_source, g.forward(), {q.source}};
  Side bwd{&d.to_target, reverse_view(g), {q.target}};

  while (fwd.depth + bwd.depth < q.k && !fwd.frontier.empty() &&
         !bwd.frontier.empty()) {
    if (fwd.frontier.size() <= bwd.frontier.size())
      expand(fwd, d.touched);
    else
      expand(bwd, d.touched);
  }

  // Snapshot: the backward pass may only use forward distances from the
  // unrestricted phase, which are exact.
  const unsigned fwd_depth = fwd.depth;
  const unsigned bwd_depth = bwd.depth;
  std::vector<Hops> bwd_exact = d.to_target;
  for (Hops& h : bwd_exact)
    if (h > bwd_depth) h = kUnreached;
  finish(fwd, bwd_exact, q.k, d.touched);

  std::vector<Hops> fwd_exact = d.from_source;
  for (Hops& h : fwd_exact)
    if (h > fwd_depth) h = kUnreached;
  finish(bwd, fwd_exact, q.k, d.touched);

  std::sort(d.touched.begin(), d.touched.end());
  d.touched.erase(std::unique(d.touched.begin(), d.touched.end()),
                  d.touched.end());
  return d;
}

std::vector<Edge> k_hop_subgraph(const DirectedGraph& g, const DistanceField& d) {
  std::vector<Edge> edges;
  for (VertexId u : d.touched) {
    if (d.from_source[u] == kUnreached) continue;
    for (VertexId v : g.out(u))
      if (in_k_hop_subgraph(d, u, v)) edges.push_back({u, v});
  }
  return edges;
}

}  // namespace spg

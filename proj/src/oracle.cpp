#include "spg/oracle.hpp"

#include <algorithm>
#include <ostream>

namespace spg {

namespace {

class PathWalker {
 public:
  PathWalker(const DirectedGraph& g, const Query& q,
             const std::function<void(std::span<const VertexId>)>& visit,
             std::size_t limit, bool distance_pruning)
      : g_(g), q_(q), visit_(visit), limit_(limit),
        on_path_(g.vertex_count(), false) {
    if (distance_pruning) {
      // Plain reverse BFS: a lower bound on the hops left, so the budget
      // check never discards a path that could still reach t in time.
      const auto hops = bounded_bfs(reverse_view(g), q.target, q.k);
      to_target_.assign(hops.begin(), hops.end());
    } else {
      to_target_.assign(g.vertex_count(), 0);
    }
  }

  void run() {
    path_.push_back(q_.source);
    on_path_[q_.source] = true;
    descend(q_.source);
  }

 private:
  void descend(VertexId cur) {
    if (cur == q_.target) {
      if (++emitted_ > limit_) throw EnumerationOverflow(limit_);
      visit_(path_);
      return;
    }
    const std::size_t used = path_.size() - 1;
    for (VertexId next : g_.out(cur)) {
      if (on_path_[next] || to_target_[next] < 0) continue;
      if (used + 1 + static_cast<std::size_t>(to_target_[next]) > q_.k) continue;
      on_path_[next] = true;
      path_.push_back(next);
      descend(next);
      path_.pop_back();
      on_path_[next] = false;
    }
  }

  const DirectedGraph& g_;
  const Query& q_;
  const std::function<void(std::span<const VertexId>)>& visit_;
  std::size_t limit_;
  std::size_t emitted_ = 0;
  std::vector<bool> on_path_;
  std::vector<int> to_target_;
  std::vector<VertexId> path_;
};

}  // namespace

void for_each_simple_path(
    const DirectedGraph& g, const Query& q,
    const std::function<void(std::span<const VertexId>)>& visit,
    std::size_t limit, bool distance_pruning) {
  PathWalker(g, q, visit, limit, distance_pruning).run();
}

PathSet enumerate_simple_paths(const DirectedGraph& g, const Query& q,
                               std::size_t limit, bool distance_pruning) {
  PathSet set;
  for_each_simple_path(
      g, q,
      [&set](std::span<const VertexId> p) { set.paths.emplace_back(p.begin(), p.end()); },
      limit, distance_pruning);
  return set;
}

SimplePathGraph oracle_spg(const PathSet& paths) {
  std::vector<Edge> edges;
  for (const auto& p : paths.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.push_back({p[i], p[i + 1]});
  return make_simple_path_graph(std::move(edges));
}

SimplePathGraph oracle_spg(const DirectedGraph& g, const Query& q,
                           std::size_t limit, bool distance_pruning) {
  std::vector<bool> seen;
  std::vector<Edge> edges;
  // Mark edges by their position in the out-CSR to avoid storing duplicates.
  std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) offset[u + 1] = offset[u] + g.out(u).size();
  seen.assign(offset.back(), false);
  for_each_simple_path(
      g, q,
      [&](std::span<const VertexId> p) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          auto adj = g.out(p[i]);
          const auto pos = offset[p[i]] + static_cast<std::size_t>(
              std::lower_bound(adj.begin(), adj.end(), p[i + 1]) - adj.begin());
          if (!seen[pos]) {
            seen[pos] = true;
            edges.push_back({p[i], p[i + 1]});
          }
        }
      },
      limit, distance_pruning);
  return make_simple_path_graph(std::move(edges));
}

BruteEvTable brute_ev_table(const DirectedGraph& g, const Query& q,
                            unsigned max_layer, Direction direction,
                            std::size_t limit) {
  const GraphView view = direction == Direction::forward ? g.forward() : reverse_view(g);
  const VertexId root = direction == Direction::forward ? q.source : q.target;
  const VertexId excluded = direction == Direction::forward ? q.target : q.source;

  // exact[j][v]: intersection over simple paths of exactly j edges.
  BruteEvTable exact(max_layer + 1,
                     std::vector<std::optional<std::vector<VertexId>>>(g.vertex_count()));
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<VertexId> path{root};
  on_path[root] = true;
  std::size_t visited = 0;

  auto record = [&](VertexId v) {
    if (++visited > limit) throw EnumerationOverflow(limit);
    auto& slot = exact[path.size() - 1][v];
    if (!slot) {
      slot.emplace(path.begin(), path.end());
      std::sort(slot->begin(), slot->end());
    } else {
      std::erase_if(*slot, [&](VertexId x) { return !on_path[x]; });
    }
  };

  std::function<void(VertexId)> dfs = [&](VertexId cur) {
    record(cur);
    if (path.size() - 1 == max_layer) return;
    for (VertexId next : view.out(cur)) {
      if (on_path[next] || next == excluded) continue;
      on_path[next] = true;
      path.push_back(next);
      dfs(next);
      path.pop_back();
      on_path[next] = false;
    }
  };
  dfs(root);

  BruteEvTable table(max_layer + 1,
                     std::vector<std::optional<std::vector<VertexId>>>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::optional<std::vector<VertexId>> acc;
    for (unsigned l = 0; l <= max_layer; ++l) {
      if (exact[l][v]) {
        if (!acc) {
          acc = exact[l][v];
        } else {
          std::vector<VertexId> merged;
          std::set_intersection(acc->begin(), acc->end(), exact[l][v]->begin(),
                                exact[l][v]->end(), std::back_inserter(merged));
          acc = std::move(merged);
        }
      }
      table[l][v] = acc;
    }
  }
  return table;
}

std::optional<std::vector<VertexId>> brute_ev(const DirectedGraph& g,
                                              const Query& q, VertexId vertex,
                                              unsigned layer, Direction direction,
                                              std::size_t limit) {
  return brute_ev_table(g, q, layer, direction, limit)[layer][vertex];
}

Metrics compute_metrics(std::size_t graph_edges, std::size_t spg_edges,
                        std::size_t upper_edges) {
  Metrics m;
  m.graph_edges = graph_edges;
  m.spg_edges = spg_edges;
  m.upper_edges = upper_edges;
  m.coverage_ratio =
      graph_edges == 0 ? 0.0 : static_cast<double>(spg_edges) / static_cast<double>(graph_edges);
  if (spg_edges > 0)
    m.redundant_ratio = (static_cast<double>(upper_edges) - static_cast<double>(spg_edges)) /
                        static_cast<double>(spg_edges);
  return m;
}

Metrics compute_metrics(const DirectedGraph& g, const SimplePathGraph& spg,
                        const UpperBoundGraph& upper) {
  return compute_metrics(g.edge_count(), spg.edges.size(),
                         upper.count(EdgeLabel::undetermined) +
                             upper.count(EdgeLabel::definite));
}

void write_paths(std::ostream& out, const DirectedGraph& g, const PathSet& paths) {
  for (const auto& p : paths.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << g.label_of(p[i]);
    }
    out << '\n';
  }
}

}  // namespace spg

#ifndef SPG_TESTS_FIXTURES_HPP
#define SPG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spg/graph.hpp"

namespace spg::testing {

// A small named graph. Names map to external labels 0..n-1, which are also
// the internal indices because every vertex has an edge.
struct Fixture {
  DirectedGraph graph;
  std::map<std::string, VertexId> ids;

  VertexId operator[](const std::string& name) const { return ids.at(name); }
  Query query(unsigned k) const { return Query{ids.at("s"), ids.at("t"), k}; }
  Edge edge(const std::string& u, const std::string& v) const {
    return Edge{ids.at(u), ids.at(v)};
  }

  std::vector<VertexId> set(std::initializer_list<const char*> names) const {
    std::vector<VertexId> out;
    for (const char* n : names) out.push_back(ids.at(n));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Edge> edges(
      std::initializer_list<std::pair<const char*, const char*>> pairs) const {
    std::vector<Edge> out;
    for (auto [u, v] : pairs) out.push_back(edge(u, v));
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline Fixture make_fixture(
    const std::vector<std::string>& names,
    std::initializer_list<std::pair<const char*, const char*>> edges) {
  Fixture f;
  for (std::size_t i = 0; i < names.size(); ++i)
    f.ids[names[i]] = static_cast<VertexId>(i);
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({f.ids.at(u), f.ids.at(v)});
  f.graph = DirectedGraph::from_edges(static_cast<VertexId>(names.size()), list);
  return f;
}

// s->a, s->c, a->c, a->h, c->b, h->b, b->t
inline Fixture f1() {
  return make_fixture({"s", "a", "c", "h", "b", "t"},
                      {{"s", "a"}, {"s", "c"}, {"a", "c"}, {"a", "h"},
                       {"c", "b"}, {"h", "b"}, {"b", "t"}});
}

// s->x1->x2->x3->x4->x5->t
inline Fixture f2() {
  return make_fixture({"s", "x1", "x2", "x3", "x4", "x5", "t"},
                      {{"s", "x1"}, {"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"},
                       {"x4", "x5"}, {"x5", "t"}});
}

// Two real paths s-c1-w-z-t and s-c2-z-t plus the cycle w->u->v->w and z->u,
// which give two undetermined edges that verification must reject.
inline Fixture f3() {
  return make_fixture({"s", "c1", "c2", "w", "z", "u", "v", "t"},
                      {{"s", "c1"}, {"s", "c2"}, {"c1", "w"}, {"c2", "z"},
                       {"w", "z"}, {"z", "t"}, {"w", "u"}, {"z", "u"},
                       {"u", "v"}, {"v", "w"}});
}

// n vertices and round(n * mean_degree) uniformly drawn directed edges
// (self-loops and duplicates are dropped by the graph builder).
inline DirectedGraph random_graph(VertexId n, double mean_degree,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  const auto m = static_cast<std::size_t>(n * mean_degree + 0.5);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) edges.push_back({pick(rng), pick(rng)});
  return DirectedGraph::from_edges(n, std::move(edges));
}

// Unbounded BFS; -1 for unreachable.
inline std::vector<int> full_bfs(const GraphView& view, VertexId source) {
  std::vector<int> dist(view.vertex_count(), -1);
  std::vector<VertexId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId y : view.out(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace spg::testing

#endif  // SPG_TESTS_FIXTURES_HPP

#include "spg/verify.hpp"

#include <algorithm>
#include <limits>

namespace spg {

SimplePathGraph make_simple_path_graph(std::vector<Edge> edges) {
  SimplePathGraph spg;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    spg.vertices.push_back(e.from);
    spg.vertices.push_back(e.to);
  }
  std::sort(spg.vertices.begin(), spg.vertices.end());
  spg.vertices.erase(std::unique(spg.vertices.begin(), spg.vertices.end()),
                     spg.vertices.end());
  spg.edges = std::move(edges);
  return spg;
}

SearchAdjacency natural_adjacency(const UpperBoundGraph& ub) {
  SearchAdjacency adj;
  adj.out_offsets.push_back(0);
  adj.in_offsets.push_back(0);
  for (std::uint32_t v = 0; v < ub.local_count(); ++v) {
    auto o = ub.out(v);
    auto i = ub.in(v);
    adj.out_arcs.insert(adj.out_arcs.end(), o.begin(), o.end());
    adj.in_arcs.insert(adj.in_arcs.end(), i.begin(), i.end());
    adj.out_offsets.push_back(static_cast<std::uint32_t>(adj.out_arcs.size()));
    adj.in_offsets.push_back(static_cast<std::uint32_t>(adj.in_arcs.size()));
  }
  return adj;
}

namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

// Multi-source BFS in local ids. `backward` walks in-arcs, which yields the
// distance from each vertex to the nearest seed along out-arcs.
std::vector<std::uint32_t> seeded_bfs(const UpperBoundGraph& ub,
                                      std::span<const VertexId> seeds,
                                      bool backward) {
  std::vector<std::uint32_t> dist(ub.local_count(), kFar);
  std::vector<std::uint32_t> frontier, next;
  for (VertexId v : seeds) {
    const auto l = ub.local_of(v);
    if (l == UpperBoundGraph::kNoLocal || dist[l] == 0) continue;
    dist[l] = 0;
    frontier.push_back(l);
  }
  for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (auto x : frontier) {
      for (const auto& arc : backward ? ub.in(x) : ub.out(x)) {
        if (dist[arc.vertex] != kFar) continue;
        dist[arc.vertex] = depth;
        next.push_back(arc.vertex);
      }
    }
    frontier.swap(next);
  }
  return dist;
}

}  // namespace

SearchAdjacency order_adjacency(const UpperBoundGraph& ub, const BoundaryIndex& b) {
  SearchAdjacency adj = natural_adjacency(ub);
  if (b.departures.empty() || b.arrivals.empty()) return adj;

  const auto to_arrival = seeded_bfs(ub, b.arrivals, /*backward=*/true);
  const auto from_departure = seeded_bfs(ub, b.departures, /*backward=*/false);
  const auto verts = ub.vertices();

  std::vector<std::size_t> out_a_size(ub.local_count(), 0), in_d_size(ub.local_count(), 0);
  for (std::size_t i = 0; i < b.arrivals.size(); ++i) {
    const auto l = ub.local_of(b.arrivals[i]);
    if (l != UpperBoundGraph::kNoLocal) out_a_size[l] = b.out_a[i].size();
  }
  for (std::size_t i = 0; i < b.departures.size(); ++i) {
    const auto l = ub.local_of(b.departures[i]);
    if (l != UpperBoundGraph::kNoLocal) in_d_size[l] = b.in_d[i].size();
  }

  auto sort_range = [&](std::vector<UpperBoundGraph::Arc>& arcs,
                        const std::vector<std::uint32_t>& offsets,
                        const std::vector<std::uint32_t>& dist,
                        const std::vector<std::size_t>& size) {
    for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
      std::stable_sort(arcs.begin() + offsets[v], arcs.begin() + offsets[v + 1],
                       [&](const auto& a, const auto& c) {
                         if (dist[a.vertex] != dist[c.vertex])
                           return dist[a.vertex] < dist[c.vertex];
                         if (dist[a.vertex] == 0 && size[a.vertex] != size[c.vertex])
                           return size[a.vertex] > size[c.vertex];
                         return verts[a.vertex] < verts[c.vertex];
                       });
    }
  };
  sort_range(adj.out_arcs, adj.out_offsets, to_arrival, out_a_size);
  sort_range(adj.in_arcs, adj.in_offsets, from_departure, in_d_size);
  return adj;
}

namespace {

class Searcher {
 public:
  Searcher(const UpperBoundGraph& ub, const BoundaryIndex& b,
           const SearchAdjacency& adj)
      : ub_(ub),
        adj_(adj),
        depth_limit_(ub.query().k - 4),
        on_stack_(ub.local_count(), false),
        arrival_(ub.local_count(), -1),
        departure_(ub.local_count(), -1) {
    for (std::size_t i = 0; i < b.arrivals.size(); ++i) {
      const auto l = ub.local_of(b.arrivals[i]);
      if (l == UpperBoundGraph::kNoLocal) continue;
      arrival_[l] = static_cast<int>(out_a_.size());
      out_a_.push_back(to_local(b.out_a[i]));
    }
    for (std::size_t i = 0; i < b.departures.size(); ++i) {
      const auto l = ub.local_of(b.departures[i]);
      if (l == UpperBoundGraph::kNoLocal) continue;
      departure_[l] = static_cast<int>(in_d_.size());
      in_d_.push_back(to_local(b.in_d[i]));
    }
    const auto labels = ub.labels();
    confirmed_.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      confirmed_[i] = labels[i] == EdgeLabel::definite;
  }

  void run() {
    const Query& q = ub_.query();
    const auto candidates = ub_.candidates();
    const auto labels = ub_.labels();
    const auto s = ub_.local_of(q.source);
    const auto t = ub_.local_of(q.target);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (labels[i] != EdgeLabel::undetermined || confirmed_[i]) continue;
      const auto u = ub_.local_of(candidates[i].from);
      const auto v = ub_.local_of(candidates[i].to);
      stack_v_.assign({u, v});
      if (s != UpperBoundGraph::kNoLocal) stack_v_.push_back(s);
      if (t != UpperBoundGraph::kNoLocal) stack_v_.push_back(t);
      for (auto x : stack_v_) on_stack_[x] = true;
      stack_e_.assign({static_cast<std::uint32_t>(i)});
      forward(v, 1, u);
      for (auto x : stack_v_) on_stack_[x] = false;
    }
  }

  const std::vector<bool>& confirmed() const { return confirmed_; }
  std::size_t longest_witness() const { return longest_witness_; }

 private:
  std::vector<std::uint32_t> to_local(std::span<const VertexId> members) const {
    std::vector<std::uint32_t> out;
    for (VertexId x : members) {
      const auto l = ub_.local_of(x);
      if (l != UpperBoundGraph::kNoLocal) out.push_back(l);
    }
    return out;
  }

  bool forward(std::uint32_t cur, unsigned depth, std::uint32_t u) {
    if (arrival_[cur] >= 0 && backward(u, depth, cur)) return true;
    if (depth < depth_limit_) {
      for (const auto& arc : adj_.out(cur)) {
        if (on_stack_[arc.vertex]) continue;
        push(arc);
        if (forward(arc.vertex, depth + 1, u)) return true;
        pop();
      }
    }
    return false;
  }

  bool backward(std::uint32_t cur, unsigned depth, std::uint32_t arrival) {
    if (departure_[cur] >= 0 && try_add_edges(cur, arrival)) return true;
    if (depth < depth_limit_) {
      for (const auto& arc : adj_.in(cur)) {
        if (on_stack_[arc.vertex]) continue;
        push(arc);
        if (backward(arc.vertex, depth + 1, arrival)) return true;
        pop();
      }
    }
    return false;
  }

  // Needs x in In_D(departure) and y in Out_A(arrival), both off the stack
  // and x != y.
  bool try_add_edges(std::uint32_t departure, std::uint32_t arrival) {
    std::uint32_t first_x = 0, first_y = 0;
    std::size_t nx = 0, ny = 0;
    for (auto x : in_d_[static_cast<std::size_t>(departure_[departure])]) {
      if (on_stack_[x]) continue;
      if (nx++ == 0) first_x = x;
    }
    if (nx == 0) return false;
    for (auto y : out_a_[static_cast<std::size_t>(arrival_[arrival])]) {
      if (on_stack_[y]) continue;
      if (ny++ == 0) first_y = y;
    }
    if (ny == 0) return false;
    if (nx == 1 && ny == 1 && first_x == first_y) return false;
    for (auto e : stack_e_) confirmed_[e] = true;
    longest_witness_ = std::max(longest_witness_, stack_e_.size());
    return true;
  }

  void push(const UpperBoundGraph::Arc& arc) {
    on_stack_[arc.vertex] = true;
    stack_v_.push_back(arc.vertex);
    stack_e_.push_back(arc.candidate);
  }
  void pop() {
    on_stack_[stack_v_.back()] = false;
    stack_v_.pop_back();
    stack_e_.pop_back();
  }

  const UpperBoundGraph& ub_;
  const SearchAdjacency& adj_;
  unsigned depth_limit_;
  std::vector<bool> on_stack_;
  std::vector<int> arrival_;
  std::vector<int> departure_;
  std::vector<std::vector<std::uint32_t>> out_a_;
  std::vector<std::vector<std::uint32_t>> in_d_;
  std::vector<bool> confirmed_;
  std::vector<std::uint32_t> stack_v_;
  std::vector<std::uint32_t> stack_e_;
  std::size_t longest_witness_ = 0;
};

}  // namespace

SimplePathGraph verify_undetermined(const UpperBoundGraph& ub,
                                    const BoundaryIndex& b,
                                    const VerifyOptions& options) {
  const Query& q = ub.query();
  const auto candidates = ub.candidates();
  const auto labels = ub.labels();

  std::vector<Edge> edges;
  std::size_t confirmed_count = 0, longest = 0;
  if (q.k >= 5 && ub.count(EdgeLabel::undetermined) > 0) {
    const SearchAdjacency adj = options.ordering && q.k >= 6
                                    ? order_adjacency(ub, b)
                                    : natural_adjacency(ub);
    Searcher searcher(ub, b, adj);
    searcher.run();
    const auto& confirmed = searcher.confirmed();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!confirmed[i]) continue;
      edges.push_back(candidates[i]);
      if (labels[i] == EdgeLabel::undetermined) ++confirmed_count;
    }
    longest = searcher.longest_witness();
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (labels[i] == EdgeLabel::definite) edges.push_back(candidates[i]);
  }

  SimplePathGraph spg = make_simple_path_graph(std::move(edges));
  spg.stats.candidate_edges = candidates.size();
  spg.stats.failing_edges = ub.count(EdgeLabel::failing);
  spg.stats.undetermined_edges = ub.count(EdgeLabel::undetermined);
  spg.stats.definite_edges = ub.count(EdgeLabel::definite);
  spg.stats.confirmed_edges = confirmed_count;
  spg.stats.longest_witness = longest;
  return spg;
}

}  // namespace spg

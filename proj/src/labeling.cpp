#include "spg/labeling.hpp"

#include <algorithm>
#include <map>

namespace spg {

namespace {

bool disjoint(std::span<const VertexId> a, std::span<const VertexId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

bool definite_one_hop(VertexId u, VertexId v, const Query& q,
                      const EssentialVertexTable& fwd,
                      const EssentialVertexTable& bwd) {
  return (u == q.source && bwd.exists(v, q.k - 1)) ||
         (v == q.target && fwd.exists(u, q.k - 1));
}

// s -> u -> v ... t with EV_1(s,u) and EV_{k-2}(v,t) present, u not in the latter.
bool definite_second_from_source(VertexId u, VertexId v, const Query& q,
                                 const EssentialVertexTable& fwd,
                                 const EssentialVertexTable& bwd) {
  if (q.k < 2 || !fwd.exists(u, 1)) return false;
  auto back = bwd.find(v, q.k - 2);
  return back && !std::binary_search(back->begin(), back->end(), u);
}

bool definite_second_to_target(VertexId u, VertexId v, const Query& q,
                               const EssentialVertexTable& fwd,
                               const EssentialVertexTable& bwd) {
  if (q.k < 2 || !bwd.exists(v, 1)) return false;
  auto front = fwd.find(u, q.k - 2);
  return front && !std::binary_search(front->begin(), front->end(), v);
}

bool undetermined(VertexId u, VertexId v, const Query& q,
                  const EssentialVertexTable& fwd,
                  const EssentialVertexTable& bwd) {
  // Checking only k_b = k - k_f - 1 covers every shorter k_b.
  for (unsigned kf = 2; kf + 3 <= q.k; ++kf) {
    const unsigned kb = q.k - kf - 1;
    auto front = fwd.find(u, kf);
    if (!front) continue;
    auto back = bwd.find(v, kb);
    if (back && disjoint(*front, *back)) return true;
  }
  return false;
}

}  // namespace

EdgeLabel label_edge(VertexId u, VertexId v, const Query& q,
                     const EssentialVertexTable& fwd,
                     const EssentialVertexTable& bwd) {
  if (definite_one_hop(u, v, q, fwd, bwd) ||
      definite_second_from_source(u, v, q, fwd, bwd) ||
      definite_second_to_target(u, v, q, fwd, bwd))
    return EdgeLabel::definite;
  if (undetermined(u, v, q, fwd, bwd)) return EdgeLabel::undetermined;
  return EdgeLabel::failing;
}

EdgeClass classify_edge(VertexId u, VertexId v, const Query& q,
                        const EssentialVertexTable& fwd,
                        const EssentialVertexTable& bwd) {
  EdgeClass c;
  const bool interior = u != q.source && u != q.target && v != q.source &&
                        v != q.target;
  // Both two-hop rules are evaluated, not short-circuited: one edge can
  // witness a departure and an arrival at once.
  const bool from_source = definite_second_from_source(u, v, q, fwd, bwd);
  const bool to_target = definite_second_to_target(u, v, q, fwd, bwd);
  c.departure_witness = interior && from_source;
  c.arrival_witness = interior && to_target;
  if (from_source || to_target || definite_one_hop(u, v, q, fwd, bwd))
    c.label = EdgeLabel::definite;
  else if (undetermined(u, v, q, fwd, bwd))
    c.label = EdgeLabel::undetermined;
  return c;
}

std::vector<EdgeClass> classify_edges_serial(std::span<const Edge> edges,
                                             const Query& q,
                                             const EssentialVertexTable& fwd,
                                             const EssentialVertexTable& bwd) {
  std::vector<EdgeClass> out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    out[i] = classify_edge(edges[i].from, edges[i].to, q, fwd, bwd);
  return out;
}

std::vector<EdgeClass> classify_edges_parallel(std::span<const Edge> edges,
                                               const Query& q,
                                               const EssentialVertexTable& fwd,
                                               const EssentialVertexTable& bwd) {
  std::vector<EdgeClass> out(edges.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(edges.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = classify_edge(edges[i].from, edges[i].to, q, fwd, bwd);
  return out;
}

namespace {

template <typename Lists>
std::span<const VertexId> lookup(const std::vector<VertexId>& keys,
                                 const Lists& lists, VertexId v) {
  auto it = std::lower_bound(keys.begin(), keys.end(), v);
  if (it == keys.end() || *it != v) return {};
  return lists[static_cast<std::size_t>(it - keys.begin())];
}

void flatten(std::map<VertexId, std::vector<VertexId>>& m,
             std::vector<VertexId>& keys,
             std::vector<std::vector<VertexId>>& lists) {
  keys.clear();
  lists.clear();
  for (auto& [v, list] : m) {
    keys.push_back(v);
    lists.push_back(std::move(list));
  }
}

}  // namespace

bool BoundaryIndex::is_departure(VertexId v) const {
  return std::binary_search(departures.begin(), departures.end(), v);
}
bool BoundaryIndex::is_arrival(VertexId v) const {
  return std::binary_search(arrivals.begin(), arrivals.end(), v);
}
std::span<const VertexId> BoundaryIndex::valid_in(VertexId departure) const {
  return lookup(departures, in_d, departure);
}
std::span<const VertexId> BoundaryIndex::valid_out(VertexId arrival) const {
  return lookup(arrivals, out_a, arrival);
}

EdgeLabel UpperBoundGraph::label_of(VertexId u, VertexId v) const {
  auto it = std::lower_bound(candidates_.begin(), candidates_.end(), Edge{u, v});
  if (it == candidates_.end() || *it != Edge{u, v}) return EdgeLabel::failing;
  return labels_[static_cast<std::size_t>(it - candidates_.begin())];
}

std::size_t UpperBoundGraph::count(EdgeLabel label) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

std::vector<Edge> UpperBoundGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < candidates_.size(); ++i)
    if (labels_[i] != EdgeLabel::failing) out.push_back(candidates_[i]);
  return out;
}

std::uint32_t UpperBoundGraph::local_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return kNoLocal;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

struct UpperBoundBuilder {
  static UpperBoundGraph make(const Query& q, std::vector<Edge> candidates,
                              std::vector<EdgeLabel> labels) {
    UpperBoundGraph ub;
    ub.query_ = q;
    ub.candidates_ = std::move(candidates);
    ub.labels_ = std::move(labels);

    for (std::size_t i = 0; i < ub.candidates_.size(); ++i) {
      if (ub.labels_[i] == EdgeLabel::failing) continue;
      ub.vertices_.push_back(ub.candidates_[i].from);
      ub.vertices_.push_back(ub.candidates_[i].to);
    }
    std::sort(ub.vertices_.begin(), ub.vertices_.end());
    ub.vertices_.erase(std::unique(ub.vertices_.begin(), ub.vertices_.end()),
                       ub.vertices_.end());

    const std::size_t n = ub.vertices_.size();
    std::vector<std::vector<UpperBoundGraph::Arc>> out(n), in(n);
    for (std::size_t i = 0; i < ub.candidates_.size(); ++i) {
      if (ub.labels_[i] == EdgeLabel::failing) continue;
      const auto a = ub.local_of(ub.candidates_[i].from);
      const auto b = ub.local_of(ub.candidates_[i].to);
      const auto idx = static_cast<std::uint32_t>(i);
      out[a].push_back({b, idx});
      in[b].push_back({a, idx});
    }
    ub.out_offsets_.assign(1, 0);
    ub.in_offsets_.assign(1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      // Candidates are (u,v)-sorted, so out[v] is already ascending; in[v]
      // is ascending in u for the same reason.
      ub.out_arcs_.insert(ub.out_arcs_.end(), out[v].begin(), out[v].end());
      ub.in_arcs_.insert(ub.in_arcs_.end(), in[v].begin(), in[v].end());
      ub.out_offsets_.push_back(static_cast<std::uint32_t>(ub.out_arcs_.size()));
      ub.in_offsets_.push_back(static_cast<std::uint32_t>(ub.in_arcs_.size()));
    }
    return ub;
  }
};

LabelingResult build_upper_bound(const DirectedGraph& g, const Query& q,
                                 const DistanceField& d,
                                 const EssentialVertexTable& fwd,
                                 const EssentialVertexTable& bwd,
                                 const LabelingOptions& options) {
  std::vector<Edge> candidates = k_hop_subgraph(g, d);
  const std::vector<EdgeClass> classes =
      options.parallel ? classify_edges_parallel(candidates, q, fwd, bwd)
                       : classify_edges_serial(candidates, q, fwd, bwd);

  // Merge in candidate order so the capped lists do not depend on threading.
  const std::size_t cap =
      options.boundary_cap ? (q.k >= 2 ? q.k - 2 : 0) : static_cast<std::size_t>(-1);
  std::map<VertexId, std::vector<VertexId>> departures, arrivals;
  std::vector<EdgeLabel> labels(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    labels[i] = classes[i].label;
    const Edge e = candidates[i];
    if (classes[i].departure_witness) {
      auto& list = departures[e.to];
      if (list.size() < cap) list.push_back(e.from);
    }
    if (classes[i].arrival_witness) {
      auto& list = arrivals[e.from];
      if (list.size() < cap) list.push_back(e.to);
    }
  }

  LabelingResult result;
  flatten(departures, result.boundary.departures, result.boundary.in_d);
  flatten(arrivals, result.boundary.arrivals, result.boundary.out_a);
  result.upper = UpperBoundBuilder::make(q, std::move(candidates), std::move(labels));
  return result;
}

BoundaryIndex recompute_boundary(const UpperBoundGraph& upper) {
  const Query& q = upper.query();
  std::map<VertexId, std::vector<VertexId>> departures, arrivals;
  const auto s = upper.local_of(q.source);
  const auto t = upper.local_of(q.target);
  const auto verts = upper.vertices();
  auto distinct = [&](VertexId a, VertexId b) {
    return a != b && a != q.source && a != q.target && b != q.source &&
           b != q.target;
  };
  if (s != UpperBoundGraph::kNoLocal) {
    for (const auto& first : upper.out(s)) {
      const VertexId x = verts[first.vertex];
      for (const auto& second : upper.out(first.vertex)) {
        const VertexId v = verts[second.vertex];
        if (distinct(x, v)) departures[v].push_back(x);
      }
    }
  }
  if (t != UpperBoundGraph::kNoLocal) {
    for (const auto& last : upper.in(t)) {
      const VertexId y = verts[last.vertex];
      for (const auto& prev : upper.in(last.vertex)) {
        const VertexId v = verts[prev.vertex];
        if (distinct(v, y)) arrivals[v].push_back(y);
      }
    }
  }
  for (auto& [v, list] : departures) std::sort(list.begin(), list.end());
  for (auto& [v, list] : arrivals) std::sort(list.begin(), list.end());
  BoundaryIndex b;
  flatten(departures, b.departures, b.in_d);
  flatten(arrivals, b.arrivals, b.out_a);
  return b;
}

}  // namespace spg

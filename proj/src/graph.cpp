#include "spg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace spg {

InsufficientQueries::InsufficientQueries(std::size_t found,
                                         std::size_t requested)
    : std::runtime_error("found only " + std::to_string(found) + " of " +
                         std::to_string(requested) +
                         " k-hop reachable query pairs"),
      found_(found),
      requested_(requested) {}

Query make_query(const DirectedGraph& g, VertexId source, VertexId target,
                 unsigned k) {
  if (source >= g.vertex_count() || target >= g.vertex_count())
    throw InvalidQuery("query endpoint is not a vertex of the graph");
  if (source == target)
    throw InvalidQuery("source and target must differ");
  if (k < 1 || k > kMaxHops)
    throw InvalidQuery("hop constraint must be in [1, " +
                       std::to_string(kMaxHops) + "]");
  return Query{source, target, k};
}

DirectedGraph DirectedGraph::build(std::vector<Label> labels,
                                   std::vector<Edge> edges) {
  std::erase_if(edges, [](const Edge& e) { return e.from == e.to; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  DirectedGraph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.out_offsets_[e.from + 1];
    ++g.in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_targets_.resize(edges.size());
  g.in_targets_.resize(edges.size());
  std::vector<std::size_t> in_cursor(g.in_offsets_.begin(),
                                     g.in_offsets_.end() - 1);
  // Edges are sorted by (from, to), so both adjacency arrays come out sorted.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.out_targets_[i] = edges[i].to;
    g.in_targets_[in_cursor[edges[i].to]++] = edges[i].from;
  }
  return g;
}

DirectedGraph DirectedGraph::from_labeled_edges(
    std::vector<std::pair<Label, Label>> edges) {
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::vector<Label> labels;
  labels.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto index = [&labels](Label l) {
    return static_cast<VertexId>(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Edge> dense;
  dense.reserve(edges.size());
  for (const auto& [u, v] : edges) dense.push_back({index(u), index(v)});
  return build(std::move(labels), std::move(dense));
}

DirectedGraph DirectedGraph::from_edges(VertexId vertex_count,
                                        std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count)
      throw std::out_of_range("edge endpoint exceeds vertex count");
  }
  std::vector<Label> labels(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) labels[v] = v;
  return build(std::move(labels), std::move(edges));
}

bool DirectedGraph::has_edge(VertexId u, VertexId v) const {
  auto adj = out(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<VertexId> DirectedGraph::index_of(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : out(u)) result.push_back({u, v});
  return result;
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Label parse_label(std::string_view token, std::size_t line) {
  Label value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "malformed vertex label '" + std::string(token) + "'");
  if (value > static_cast<Label>(std::numeric_limits<std::int64_t>::max()))
    throw ParseError(line, "vertex label exceeds 63 bits");
  return value;
}

unsigned parse_hops(std::string_view token, std::size_t line) {
  unsigned value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "malformed hop constraint '" + std::string(token) + "'");
  return value;
}

bool is_comment_or_blank(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens = tokenize(line);
  return tokens.empty() || tokens.front().front() == '#' ||
         tokens.front().front() == '%';
}

}  // namespace

DirectedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> edges;
  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line, tokens)) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two vertex labels, got " +
                                    std::to_string(tokens.size()) + " tokens");
    edges.emplace_back(parse_label(tokens[0], line_no),
                       parse_label(tokens[1], line_no));
  }
  if (in.bad()) throw std::runtime_error("read error while loading edge list");
  return DirectedGraph::from_labeled_edges(std::move(edges));
}

DirectedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.out(u)) out << g.label_of(u) << ' ' << g.label_of(v) << '\n';
}

std::vector<int> bounded_bfs(const GraphView& view, VertexId source,
                             unsigned max_depth) {
  std::vector<int> hops(view.vertex_count(), -1);
  std::vector<VertexId> frontier{source}, next;
  hops[source] = 0;
  for (unsigned depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId x : frontier) {
      for (VertexId y : view.out(x)) {
        if (hops[y] >= 0) continue;
        hops[y] = static_cast<int>(depth);
        next.push_back(y);
      }
    }
    frontier.swap(next);
  }
  return hops;
}

std::vector<Query> sample_queries(const DirectedGraph& g, unsigned k,
                                  std::size_t n, std::uint64_t seed,
                                  std::size_t max_attempts) {
  if (g.vertex_count() == 0) throw InvalidQuery("cannot sample queries on an empty graph");
  if (k < 1 || k > kMaxHops) throw InvalidQuery("hop constraint out of range");
  if (max_attempts == 0) max_attempts = 100 * n;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick_source(
      0, static_cast<VertexId>(g.vertex_count() - 1));
  std::vector<Query> queries;
  queries.reserve(n);
  std::vector<VertexId> reachable;
  std::set<std::pair<VertexId, VertexId>> used;
  for (std::size_t attempt = 0; attempt < max_attempts && queries.size() < n;
       ++attempt) {
    const VertexId s = pick_source(rng);
    const auto hops = bounded_bfs(g.forward(), s, k);
    reachable.clear();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (v != s && hops[v] > 0) reachable.push_back(v);
    if (reachable.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_target(0, reachable.size() - 1);
    const VertexId t = reachable[pick_target(rng)];
    if (!used.emplace(s, t).second) continue;
    queries.push_back(Query{s, t, k});
  }
  if (queries.size() < n) throw InsufficientQueries(queries.size(), n);
  return queries;
}

std::vector<Query> read_queries(std::istream& in, const DirectedGraph& g) {
  std::vector<Query> queries;
  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line, tokens)) continue;
    if (tokens.size() != 3)
      throw ParseError(line_no, "expected 's<TAB>t<TAB>k'");
    const Label s = parse_label(tokens[0], line_no);
    const Label t = parse_label(tokens[1], line_no);
    const unsigned k = parse_hops(tokens[2], line_no);
    auto si = g.index_of(s);
    auto ti = g.index_of(t);
    if (!si || !ti)
      throw ParseError(line_no, "query endpoint is not a vertex of the graph");
    try {
      queries.push_back(make_query(g, *si, *ti, k));
    } catch (const InvalidQuery& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return queries;
}

void write_queries(std::ostream& out, const DirectedGraph& g,
                   std::span<const Query> queries) {
  for (const Query& q : queries)
    out << g.label_of(q.source) << '\t' << g.label_of(q.target) << '\t' << q.k
        << '\n';
}

}  // namespace spg

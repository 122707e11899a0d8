#ifndef SPG_LABELING_HPP
#define SPG_LABELING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spg/distance.hpp"
#include "spg/essential.hpp"
#include "spg/graph.hpp"

namespace spg {

enum class EdgeLabel : std::uint8_t { failing = 0, undetermined = 1, definite = 2 };

// Label plus whether the edge witnesses a departure (s -> u -> v, v in D,
// u in In_D(v)) or an arrival (u -> v -> t, u in A, v in Out_A(u)).
struct EdgeClass {
  EdgeLabel label = EdgeLabel::failing;
  bool departure_witness = false;
  bool arrival_witness = false;

  bool operator==(const EdgeClass&) const = default;
};

EdgeLabel label_edge(VertexId u, VertexId v, const Query& q,
                     const EssentialVertexTable& fwd,
                     const EssentialVertexTable& bwd);

EdgeClass classify_edge(VertexId u, VertexId v, const Query& q,
                        const EssentialVertexTable& fwd,
                        const EssentialVertexTable& bwd);

// Serial reference kernel.
std::vector<EdgeClass> classify_edges_serial(std::span<const Edge> edges,
                                             const Query& q,
                                             const EssentialVertexTable& fwd,
                                             const EssentialVertexTable& bwd);

// OpenMP kernel; element-wise identical to the serial kernel.
std::vector<EdgeClass> classify_edges_parallel(std::span<const Edge> edges,
                                               const Query& q,
                                               const EssentialVertexTable& fwd,
                                               const EssentialVertexTable& bwd);

/// Departures and arrivals with their valid in-/out-neighbours.
struct BoundaryIndex {
  std::vector<VertexId> departures;             // ascending
  std::vector<std::vector<VertexId>> in_d;      // parallel to departures
  std::vector<VertexId> arrivals;               // ascending
  std::vector<std::vector<VertexId>> out_a;     // parallel to arrivals

  bool is_departure(VertexId v) const;
  bool is_arrival(VertexId v) const;
  std::span<const VertexId> valid_in(VertexId departure) const;
  std::span<const VertexId> valid_out(VertexId arrival) const;
};

/// Candidate edges of one query with their labels, plus CSR adjacency over
/// the label-{1,2} edges in a compact local vertex space.
class UpperBoundGraph {
 public:
  const Query& query() const { return query_; }

  std::span<const Edge> candidates() const { return candidates_; }
  std::span<const EdgeLabel> labels() const { return labels_; }

  // failing for edges outside the candidate space.
  EdgeLabel label_of(VertexId u, VertexId v) const;

  std::size_t count(EdgeLabel label) const;
  // Label-{1,2} edges in (u, v) order.
  std::vector<Edge> edges() const;

  // Local vertex space: vertices incident to a label-{1,2} edge.
  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t local_count() const { return vertices_.size(); }
  // kNoLocal when v has no label-{1,2} edge.
  std::uint32_t local_of(VertexId v) const;
  static constexpr std::uint32_t kNoLocal = 0xFFFFFFFFu;

  struct Arc {
    std::uint32_t vertex;     // local id of the neighbour
    std::uint32_t candidate;  // index into candidates()
  };
  std::span<const Arc> out(std::uint32_t local) const {
    return {out_arcs_.data() + out_offsets_[local],
            out_arcs_.data() + out_offsets_[local + 1]};
  }
  std::span<const Arc> in(std::uint32_t local) const {
    return {in_arcs_.data() + in_offsets_[local],
            in_arcs_.data() + in_offsets_[local + 1]};
  }

 private:
  friend struct UpperBoundBuilder;

  Query query_{};
  std::vector<Edge> candidates_;
  std::vector<EdgeLabel> labels_;
  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
};

struct LabelingOptions {
  // Keep at most k-2 entries per In_D / Out_A list.
  bool boundary_cap = true;
  bool parallel = false;
};

struct LabelingResult {
  UpperBoundGraph upper;
  BoundaryIndex boundary;
};

LabelingResult build_upper_bound(const DirectedGraph& g, const Query& q,
                                 const DistanceField& d,
                                 const EssentialVertexTable& fwd,
                                 const EssentialVertexTable& bwd,
                                 const LabelingOptions& options = {});

// Rebuilds D / A directly from their definitions over the label-{1,2}
// edges of `upper`, uncapped.
BoundaryIndex recompute_boundary(const UpperBoundGraph& upper);

}  // namespace spg

#endif  // SPG_LABELING_HPP

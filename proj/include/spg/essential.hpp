#ifndef SPG_ESSENTIAL_HPP
#define SPG_ESSENTIAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spg/distance.hpp"
#include "spg/graph.hpp"

namespace spg {

enum class Direction { forward, backward };

/// Essential-vertex sets EV_l(s,u) (forward) or EV_l(u,t) (backward) for
/// layers l in [0, k-1].
///
/// An absent entry means no walk of length <= l exists from the root to the
/// vertex avoiding the excluded endpoint, or that the entry was skipped by
/// forward-looking pruning; both read as "does not exist". Sets are sorted
/// ascending. A layer whose set did not change refers to the same storage as
/// the previous layer.
class EssentialVertexTable {
 public:
  using SetView = std::span<const VertexId>;

  Direction direction() const { return direction_; }
  unsigned layer_count() const { return layers_; }

  std::optional<SetView> find(VertexId v, unsigned layer) const {
    const std::uint32_t id = set_id(v, layer);
    if (id == kAbsent) return std::nullopt;
    return set(id);
  }
  bool exists(VertexId v, unsigned layer) const {
    return set_id(v, layer) != kAbsent;
  }
  bool contains(VertexId v, unsigned layer, VertexId member) const;

  // Number of vertices with at least one present layer.
  std::size_t vertex_count() const { return vertices_.size(); }
  // Number of distinct stored sets (shared layers count once).
  std::size_t stored_set_count() const { return set_offsets_.size() - 1; }

 private:
  friend class Propagator;
  static constexpr std::uint32_t kNoSlot = 0xFFFFFFFFu;
  static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

  std::uint32_t set_id(VertexId v, unsigned layer) const {
    if (v >= slot_.size() || layer >= layers_) return kAbsent;
    const std::uint32_t slot = slot_[v];
    if (slot == kNoSlot) return kAbsent;
    return refs_[static_cast<std::size_t>(slot) * layers_ + layer];
  }
  SetView set(std::uint32_t id) const {
    return {set_data_.data() + set_offsets_[id],
            set_data_.data() + set_offsets_[id + 1]};
  }

  Direction direction_ = Direction::forward;
  unsigned layers_ = 0;
  std::vector<std::uint32_t> slot_;
  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> refs_;
  std::vector<std::uint32_t> set_offsets_{0};
  std::vector<VertexId> set_data_;
};

struct PropagationOptions {
  bool pruning = true;
};

// Forward runs from s over G avoiding t, pruned by l + Δ(y,t) <= k.
// Backward runs from t over the reversed graph avoiding s, pruned by
// l + Δ(s,y) <= k.
EssentialVertexTable propagate(const DirectedGraph& g, const Query& q,
                               const DistanceField& d, Direction direction,
                               const PropagationOptions& options = {});

inline std::optional<EssentialVertexTable::SetView> ev_exists(
    const EssentialVertexTable& table, VertexId v, unsigned layer) {
  return table.find(v, layer);
}

}  // namespace spg

#endif  // SPG_ESSENTIAL_HPP

#include "spg/essential.hpp"

#include <algorithm>

namespace spg {

bool EssentialVertexTable::contains(VertexId v, unsigned layer,
                                    VertexId member) const {
  auto s = find(v, layer);
  return s && std::binary_search(s->begin(), s->end(), member);
}

class Propagator {
 public:
  Propagator(const DirectedGraph& g, const Query& q, const DistanceField& d,
             Direction direction, const PropagationOptions& options)
      : view_(direction == Direction::forward ? g.forward() : reverse_view(g)),
        k_(q.k),
        root_(direction == Direction::forward ? q.source : q.target),
        excluded_(direction == Direction::forward ? q.target : q.source),
        remaining_(direction == Direction::forward ? d.to_target : d.from_source),
        pruning_(options.pruning) {
    table_.direction_ = direction;
    table_.layers_ = q.k;
    table_.slot_.assign(g.vertex_count(), EssentialVertexTable::kNoSlot);
    pending_pos_.assign(g.vertex_count(), kNotPending);
  }

  EssentialVertexTable run() {
    const VertexId root[] = {root_};
    ref(slot_of(root_), 0) = store(root);

    std::vector<VertexId> frontier{root_}, next;
    std::vector<VertexId> candidate;
    for (unsigned l = 1; l < k_; ++l) {
      next.clear();
      for (VertexId x : frontier) {
        const auto base = table_.set(ref(table_.slot_[x], l - 1));
        for (VertexId y : view_.out(x)) {
          if (y == root_ || y == excluded_ || !allowed(y, l)) continue;
          candidate.assign(base.begin(), base.end());
          auto at = std::lower_bound(candidate.begin(), candidate.end(), y);
          if (at == candidate.end() || *at != y) candidate.insert(at, y);

          if (pending_pos_[y] == kNotPending) {
            pending_pos_[y] = static_cast<std::uint32_t>(next.size());
            next.push_back(y);
            if (pending_.size() < next.size()) pending_.emplace_back();
            auto& acc = pending_[pending_pos_[y]];
            // EV_l(s,y) ⊆ EV_{l-1}(s,y): seeding with the previous layer
            // accounts for in-neighbours that were reached at shorter
            // lengths only and so are absent from this frontier.
            const std::uint32_t slot = table_.slot_[y];
            const std::uint32_t prev = slot == EssentialVertexTable::kNoSlot
                                           ? EssentialVertexTable::kAbsent
                                           : ref(slot, l - 1);
            if (prev == EssentialVertexTable::kAbsent) {
              acc = candidate;
            } else {
              auto p = table_.set(prev);
              acc.clear();
              std::set_intersection(p.begin(), p.end(), candidate.begin(),
                                    candidate.end(), std::back_inserter(acc));
            }
          } else {
            intersect_into(pending_[pending_pos_[y]], candidate);
          }
        }
      }

      for (std::size_t i = 0; i < next.size(); ++i) {
        const VertexId y = next[i];
        const std::uint32_t slot = slot_of(y);
        const std::uint32_t prev = ref(slot, l - 1);
        auto& acc = pending_[i];
        if (prev != EssentialVertexTable::kAbsent && same(prev, acc))
          ref(slot, l) = prev;
        else
          ref(slot, l) = store(acc);
        pending_pos_[y] = kNotPending;
      }

      for (VertexId u : table_.vertices_) {
        const std::uint32_t slot = table_.slot_[u];
        if (ref(slot, l) == EssentialVertexTable::kAbsent && allowed(u, l))
          ref(slot, l) = ref(slot, l - 1);
      }
      frontier.swap(next);
    }
    return std::move(table_);
  }

 private:
  static constexpr std::uint32_t kNotPending = 0xFFFFFFFFu;

  bool allowed(VertexId y, unsigned l) const {
    if (!pruning_) return true;
    return remaining_[y] != kUnreached &&
           l + remaining_[y] <= k_;
  }

  std::uint32_t slot_of(VertexId v) {
    std::uint32_t& slot = table_.slot_[v];
    if (slot == EssentialVertexTable::kNoSlot) {
      slot = static_cast<std::uint32_t>(table_.vertices_.size());
      table_.vertices_.push_back(v);
      table_.refs_.resize(table_.refs_.size() + k_, EssentialVertexTable::kAbsent);
    }
    return slot;
  }

  std::uint32_t& ref(std::uint32_t slot, unsigned layer) {
    return table_.refs_[static_cast<std::size_t>(slot) * k_ + layer];
  }

  std::uint32_t store(std::span<const VertexId> members) {
    table_.set_data_.insert(table_.set_data_.end(), members.begin(), members.end());
    table_.set_offsets_.push_back(static_cast<std::uint32_t>(table_.set_data_.size()));
    return static_cast<std::uint32_t>(table_.set_offsets_.size() - 2);
  }

  bool same(std::uint32_t id, const std::vector<VertexId>& members) const {
    auto s = table_.set(id);
    return std::equal(s.begin(), s.end(), members.begin(), members.end());
  }

  static void intersect_into(std::vector<VertexId>& acc,
                             const std::vector<VertexId>& other) {
    auto out = acc.begin();
    auto a = acc.begin();
    auto b = other.begin();
    while (a != acc.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        *out++ = *a++;
        ++b;
      }
    }
    acc.erase(out, acc.end());
  }

  GraphView view_;
  unsigned k_;
  VertexId root_;
  VertexId excluded_;
  const std::vector<Hops>& remaining_;
  bool pruning_;
  EssentialVertexTable table_;
  std::vector<std::uint32_t> pending_pos_;
  std::vector<std::vector<VertexId>> pending_;
};

EssentialVertexTable propagate(const DirectedGraph& g, const Query& q,
                               const DistanceField& d, Direction direction,
                               const PropagationOptions& options) {
  return Propagator(g, q, d, direction, options).run();
}

}  // namespace spg

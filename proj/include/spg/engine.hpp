#ifndef SPG_ENGINE_HPP
#define SPG_ENGINE_HPP

#include "spg/distance.hpp"
#include "spg/essential.hpp"
#include "spg/graph.hpp"
#include "spg/labeling.hpp"
#include "spg/verify.hpp"

namespace spg {

struct EngineOptions {
  bool pruning = true;        // forward-looking pruning during propagation
  bool ordering = true;       // neighbour ordering before verification
  bool boundary_cap = true;   // cap In_D / Out_A at k-2 entries
  bool parallel_labeling = false;
};

struct EveResult {
  SimplePathGraph spg;
  UpperBoundGraph upper;
  BoundaryIndex boundary;
};

struct UpperBoundResult {
  UpperBoundGraph upper;
  BoundaryIndex boundary;
  PhaseTimings timings;  // verification_ms stays 0
};

// Distances, both propagations and labeling, without verification.
UpperBoundResult run_upper_bound(const DirectedGraph& g, const Query& q,
                                 const EngineOptions& options = {});

// Distances, both propagations, labeling, then verification. Phase timings
// land in result.spg.stats.timings.
EveResult run_eve(const DirectedGraph& g, const Query& q,
                  const EngineOptions& options = {});

}  // namespace spg

#endif  // SPG_ENGINE_HPP

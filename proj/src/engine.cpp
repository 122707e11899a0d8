#include "spg/engine.hpp"

#include <chrono>

namespace spg {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

UpperBoundResult run_upper_bound(const DirectedGraph& g, const Query& q,
                                 const EngineOptions& options) {
  const auto start = Clock::now();
  UpperBoundResult result;
  PhaseTimings& timings = result.timings;

  auto mark = Clock::now();
  const DistanceField d = adaptive_bidirectional_distances(g, q);
  timings.distance_ms = elapsed_ms(mark);

  mark = Clock::now();
  const PropagationOptions prop{options.pruning};
  const EssentialVertexTable fwd = propagate(g, q, d, Direction::forward, prop);
  const EssentialVertexTable bwd = propagate(g, q, d, Direction::backward, prop);
  timings.propagation_ms = elapsed_ms(mark);

  mark = Clock::now();
  LabelingResult labeled = build_upper_bound(
      g, q, d, fwd, bwd, LabelingOptions{options.boundary_cap, options.parallel_labeling});
  timings.labeling_ms = elapsed_ms(mark);

  result.upper = std::move(labeled.upper);
  result.boundary = std::move(labeled.boundary);
  timings.total_ms = elapsed_ms(start);
  return result;
}

EveResult run_eve(const DirectedGraph& g, const Query& q,
                  const EngineOptions& options) {
  const auto start = Clock::now();
  UpperBoundResult labeled = run_upper_bound(g, q, options);
  PhaseTimings timings = labeled.timings;

  const auto mark = Clock::now();
  EveResult result{verify_undetermined(labeled.upper, labeled.boundary,
                                       VerifyOptions{options.ordering}),
                   std::move(labeled.upper), std::move(labeled.boundary)};
  timings.verification_ms = elapsed_ms(mark);
  timings.total_ms = elapsed_ms(start);
  result.spg.stats.timings = timings;
  return result;
}

}  // namespace spg

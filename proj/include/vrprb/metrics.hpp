#pragma once

#include "vrprb/ea.hpp"

namespace vrprb {

// Deliberately poor objective values bounding the hypervolume region.
// Both coordinates are strictly positive and strictly worse than anything a
// feasible front attains on the benchmark geometry.
struct ReferencePoint {
  double distance = 0.0;
  double balance = 0.0;
};

struct FrontPoint {
  double distance = 0.0;
  double balance = 0.0;
};

// Points in the unified (total distance, MaxMin balance) space.
struct UnifiedFront {
  std::vector<FrontPoint> points;
};

// Distance coordinate: total distance of the one-route-per-client solution
// (an upper bound by the triangle inequality). Balance coordinate: MaxMin
// value of the synthetic two-route solution holding clients 1..N-1 and {N};
// capacity is ignored for both constructions.
ReferencePoint reference_point(const Instance& instance);

// Re-evaluates every archived solution under MaxMin, then collapses
// duplicates and drops points dominated in the unified space.
UnifiedFront reevaluate_max_min(const Instance& instance, const ParetoArchive& archive);

// Divides each coordinate by the reference coordinate and clamps to [0,1];
// the reference becomes (1,1). A value beyond its reference coordinate is a
// contract violation.
UnifiedFront normalize(const UnifiedFront& front, const ReferencePoint& ref);

// Exact sweep over the staircase of non-dominated points against reference
// (1,1), minimization orientation. All points must lie in the unit square.
double hypervolume_2d(const UnifiedFront& front);

// Full pipeline for one run: re-evaluate, normalize, sweep.
double normalized_hypervolume(const Instance& instance, const ParetoArchive& archive);

}  // namespace vrprb

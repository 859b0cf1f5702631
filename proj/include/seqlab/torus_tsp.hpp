#pragma once

#include <cstdint>
#include <vector>

namespace seqlab::torus_tsp {

struct TorusPoint {
  double x = 0.0;
  double y = 0.0;
};

struct Estimate {
  double mean_eels = 0.0;
  double std_error_eels = 0.0;
  uint64_t trials = 0;
  uint64_t seed = 0;
};

inline constexpr int kDefaultExactBound = 13;

// (sqrt(2) + log(1 + sqrt(2))) / 6: the mean distance between two uniform
// points on the unit flat torus, used as the length unit.
double eel_constant();

// Geodesic distance on the unit flat torus (per-coordinate wraparound).
double torus_distance(TorusPoint p, TorusPoint q);

// Shortest closed tour through all points, Held-Karp subset DP with point 0
// fixed. Instances larger than exact_bound are refused.
double optimal_tour_length(const std::vector<TorusPoint>& points,
                           int exact_bound = kDefaultExactBound);

// Monte Carlo estimate of L(n) in eels. Each trial is a pure function of
// (seed, trial index) and the reduction tree is fixed, so the result is
// identical for any thread count.
Estimate estimate_L(int n, uint64_t trials, uint64_t seed, int threads = 1);

namespace detail {

// Counter-based uniform deviate in [0,1), keyed (seed, trial, point, coord).
double uniform01(uint64_t seed, uint64_t trial, uint64_t point, uint64_t coord);

std::vector<TorusPoint> random_instance(uint64_t seed, uint64_t trial, int n);

}  // namespace detail

}  // namespace seqlab::torus_tsp

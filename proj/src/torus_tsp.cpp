#include "seqlab/torus_tsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <thread>

#include "seqlab/errors.hpp"

namespace seqlab::torus_tsp {
namespace {

uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double pairwise_sum(const double* a, size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

}  // namespace

double eel_constant() {
  static const double kEel =
      (std::sqrt(2.0) + std::log1p(std::sqrt(2.0))) / 6.0;
  return kEel;
}

double torus_distance(TorusPoint p, TorusPoint q) {
  double dx = std::fabs(p.x - q.x);
  dx = std::min(dx, 1.0 - dx);
  double dy = std::fabs(p.y - q.y);
  dy = std::min(dy, 1.0 - dy);
  return std::sqrt(dx * dx + dy * dy);
}

double optimal_tour_length(const std::vector<TorusPoint>& points,
                           int exact_bound) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw DomainError("optimal_tour_length: need at least one point");
  if (n > exact_bound) {
    throw DomainError("optimal_tour_length: " + std::to_string(n) +
                      " points exceeds exact-solver bound " +
                      std::to_string(exact_bound));
  }
  if (n == 1) return 0.0;

  std::vector<double> dist(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      dist[static_cast<size_t>(i) * n + j] =
          torus_distance(points[i], points[j]);
    }
  }

  // Path DP over the non-anchor points: dp[mask*m + j] = shortest path from
  // point 0 visiting exactly the set mask, ending at non-anchor point j.
  const int m = n - 1;
  const size_t full = size_t{1} << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full * m, inf);
  for (int j = 0; j < m; ++j) {
    dp[(size_t{1} << j) * m + j] = dist[static_cast<size_t>(j) + 1];
  }
  for (size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      const double cur = dp[mask * m + j];
      if (cur == inf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const double cand = cur + dist[static_cast<size_t>(j + 1) * n + k + 1];
        double& slot = dp[(mask | size_t{1} << k) * m + k];
        if (cand < slot) slot = cand;
      }
    }
  }
  double best = inf;
  for (int j = 0; j < m; ++j) {
    best = std::min(best, dp[(full - 1) * m + j] +
                              dist[static_cast<size_t>(j + 1) * n]);
  }
  return best;
}

Estimate estimate_L(int n, uint64_t trials, uint64_t seed, int threads) {
  if (n < 1 || n > kDefaultExactBound) {
    throw DomainError("estimate_L: n must be in 1.." +
                      std::to_string(kDefaultExactBound));
  }
  if (trials < 2) throw DomainError("estimate_L: need at least two trials");
  if (threads < 1) threads = 1;

  std::vector<double> eels(trials);
  const double inv_eel = 1.0 / eel_constant();
  auto run_range = [&](uint64_t lo, uint64_t hi) {
    for (uint64_t t = lo; t < hi; ++t) {
      eels[t] = optimal_tour_length(detail::random_instance(seed, t, n)) *
                inv_eel;
    }
  };

  const uint64_t workers =
      std::min<uint64_t>(static_cast<uint64_t>(threads), trials);
  if (workers <= 1) {
    run_range(0, trials);
  } else {
    const uint64_t chunk = (trials + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (uint64_t w = 0; w < workers; ++w) {
      const uint64_t lo = w * chunk;
      if (lo >= trials) break;
      const uint64_t hi = std::min(trials, lo + chunk);
      pool.emplace_back([&run_range, &errors, w, lo, hi] {
        try {
          run_range(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  const double mean =
      pairwise_sum(eels.data(), eels.size()) / static_cast<double>(trials);
  std::vector<double> sq(trials);
  for (uint64_t t = 0; t < trials; ++t) {
    const double d = eels[t] - mean;
    sq[t] = d * d;
  }
  const double var =
      pairwise_sum(sq.data(), sq.size()) / static_cast<double>(trials - 1);

  Estimate est;
  est.mean_eels = mean;
  est.std_error_eels = std::sqrt(var / static_cast<double>(trials));
  est.trials = trials;
  est.seed = seed;
  return est;
}

namespace detail {

double uniform01(uint64_t seed, uint64_t trial, uint64_t point,
                 uint64_t coord) {
  uint64_t h = mix64(seed);
  h = mix64(h ^ trial);
  h = mix64(h ^ point);
  h = mix64(h ^ coord);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::vector<TorusPoint> random_instance(uint64_t seed, uint64_t trial, int n) {
  std::vector<TorusPoint> pts(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    pts[static_cast<size_t>(i)].x =
        uniform01(seed, trial, static_cast<uint64_t>(i), 0);
    pts[static_cast<size_t>(i)].y =
        uniform01(seed, trial, static_cast<uint64_t>(i), 1);
  }
  return pts;
}

}  // namespace detail

}  // namespace seqlab::torus_tsp

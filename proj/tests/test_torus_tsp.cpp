#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "seqlab/errors.hpp"
#include "seqlab/torus_tsp.hpp"

using namespace seqlab;
using torus_tsp::TorusPoint;

namespace {

// Brute-force optimal tour: all permutations with point 0 pinned first.
double tour_brute(const std::vector<TorusPoint>& points) {
  const size_t n = points.size();
  if (n < 2) return 0.0;
  std::vector<size_t> perm(n - 1);
  std::iota(perm.begin(), perm.end(), size_t{1});
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = torus_tsp::torus_distance(points[0], points[perm[0]]);
    for (size_t i = 0; i + 1 < perm.size(); ++i) {
      len += torus_tsp::torus_distance(points[perm[i]], points[perm[i + 1]]);
    }
    len += torus_tsp::torus_distance(points[perm.back()], points[0]);
    best = std::min(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<TorusPoint> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<TorusPoint> points(static_cast<size_t>(n));
  for (auto& p : points) p = {uni(rng), uni(rng)};
  return points;
}

}  // namespace

TEST_CASE("eel constant") {
  const double eel = torus_tsp::eel_constant();
  CHECK(std::abs(eel - 0.382597858232) < 1e-12);
  // Defining identity: 6*eel = sqrt(2) + log(1 + sqrt(2)).
  const double root2 = std::sqrt(2.0);
  CHECK(std::abs(6.0 * eel - root2 - std::log1p(root2)) < 1e-15);
}

TEST_CASE("torus distance is a wraparound metric") {
  CHECK(torus_tsp::torus_distance({0.0, 0.0}, {0.5, 0.5}) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(torus_tsp::torus_distance({0.1, 0.0}, {0.9, 0.0}) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK(torus_tsp::torus_distance({0.25, 0.75}, {0.25, 0.75}) == 0.0);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double diameter = std::sqrt(0.5) + 1e-12;
  for (int i = 0; i < 10'000; ++i) {
    const TorusPoint a{uni(rng), uni(rng)};
    const TorusPoint b{uni(rng), uni(rng)};
    const TorusPoint c{uni(rng), uni(rng)};
    const double ab = torus_tsp::torus_distance(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= diameter);
    CHECK(ab == torus_tsp::torus_distance(b, a));
    CHECK(ab <= torus_tsp::torus_distance(a, c) +
                    torus_tsp::torus_distance(c, b) + 1e-12);
  }
}

TEST_CASE("optimal_tour_length: tiny instances by hand") {
  CHECK_THROWS_AS(torus_tsp::optimal_tour_length({}), DomainError);
  CHECK(torus_tsp::optimal_tour_length({{0.3, 0.7}}) == 0.0);
  CHECK(torus_tsp::optimal_tour_length({{0.0, 0.0}, {0.25, 0.0}}) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // Three points: the only tour is the triangle perimeter.
  const std::vector<TorusPoint> tri = {{0.1, 0.1}, {0.4, 0.2}, {0.2, 0.5}};
  const double perimeter = torus_tsp::torus_distance(tri[0], tri[1]) +
                           torus_tsp::torus_distance(tri[1], tri[2]) +
                           torus_tsp::torus_distance(tri[2], tri[0]);
  CHECK(torus_tsp::optimal_tour_length(tri) ==
        doctest::Approx(perimeter).epsilon(1e-14));

  std::vector<TorusPoint> too_many(14, TorusPoint{0.5, 0.5});
  CHECK_THROWS_AS(torus_tsp::optimal_tour_length(too_many), DomainError);
  CHECK_NOTHROW(torus_tsp::optimal_tour_length(
      std::vector<TorusPoint>(14, TorusPoint{0.5, 0.5}), 14));
}

TEST_CASE("dynamic program equals permutation brute force") {
  std::mt19937_64 rng(42);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto points = random_points(rng, n);
      const double dp = torus_tsp::optimal_tour_length(points);
      const double brute = tour_brute(points);
      CHECK(dp == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}

TEST_CASE("tour length is translation invariant") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto points = random_points(rng, 6);
    const double dx = uni(rng);
    const double dy = uni(rng);
    auto shifted = points;
    for (auto& p : shifted) {
      p.x = std::fmod(p.x + dx, 1.0);
      p.y = std::fmod(p.y + dy, 1.0);
    }
    CHECK(torus_tsp::optimal_tour_length(points) ==
          doctest::Approx(torus_tsp::optimal_tour_length(shifted))
              .epsilon(1e-9));
  }
}

TEST_CASE("counter-based deviates are deterministic and uniform") {
  CHECK(torus_tsp::detail::uniform01(1, 2, 3, 0) ==
        torus_tsp::detail::uniform01(1, 2, 3, 0));
  CHECK(torus_tsp::detail::uniform01(1, 2, 3, 0) !=
        torus_tsp::detail::uniform01(1, 2, 3, 1));
  CHECK(torus_tsp::detail::uniform01(1, 2, 3, 0) !=
        torus_tsp::detail::uniform01(2, 2, 3, 0));

  double sum = 0.0;
  const int samples = 100'000;
  for (int i = 0; i < samples; ++i) {
    const double u = torus_tsp::detail::uniform01(7, static_cast<uint64_t>(i),
                                                  0, 0);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  // Mean of uniform(0,1): 0.5 within 5 sigma = 5/sqrt(12*samples).
  CHECK(std::abs(sum / samples - 0.5) < 5.0 / std::sqrt(12.0 * samples));

  const auto inst = torus_tsp::detail::random_instance(9, 17, 5);
  CHECK(inst.size() == 5);
  const auto again = torus_tsp::detail::random_instance(9, 17, 5);
  for (size_t i = 0; i < inst.size(); ++i) {
    CHECK(inst[i].x == again[i].x);
    CHECK(inst[i].y == again[i].y);
  }
}

TEST_CASE("estimate_L: determinism across thread counts") {
  const auto single = torus_tsp::estimate_L(5, 4000, 99, 1);
  const auto multi = torus_tsp::estimate_L(5, 4000, 99, 4);
  CHECK(single.mean_eels == multi.mean_eels);
  CHECK(single.std_error_eels == multi.std_error_eels);
  CHECK(single.trials == 4000);
  CHECK(single.seed == 99);

  const auto rerun = torus_tsp::estimate_L(5, 4000, 99, 2);
  CHECK(rerun.mean_eels == single.mean_eels);

  CHECK_THROWS_AS(torus_tsp::estimate_L(0, 100, 1), DomainError);
  CHECK_THROWS_AS(torus_tsp::estimate_L(14, 100, 1), DomainError);
  CHECK_THROWS_AS(torus_tsp::estimate_L(4, 1, 1), DomainError);
}

TEST_CASE("estimate_L: small-n sanity and error scaling") {
  // L(1) is exactly zero.
  const auto one = torus_tsp::estimate_L(1, 100, 5);
  CHECK(one.mean_eels == 0.0);
  CHECK(one.std_error_eels == 0.0);

  // L(2) in eels concentrates near 2 (tour = twice the pair distance).
  const auto two = torus_tsp::estimate_L(2, 20'000, 5);
  CHECK(std::abs(two.mean_eels - 2.0) < 3.0 * two.std_error_eels);

  const auto coarse = torus_tsp::estimate_L(4, 20'000, 11);
  const auto fine = torus_tsp::estimate_L(4, 80'000, 11);
  const double ratio = coarse.std_error_eels / fine.std_error_eels;
  // Quadrupling the trials should halve the standard error, roughly.
  CHECK(ratio > 1.6);
  CHECK(ratio < 2.4);

  // Doubling the trials shrinks it by sqrt(2), within 15 percent.
  const auto half = torus_tsp::estimate_L(4, 40'000, 11);
  const double doubling = half.std_error_eels / fine.std_error_eels;
  CHECK(doubling > std::sqrt(2.0) * 0.85);
  CHECK(doubling < std::sqrt(2.0) * 1.15);
}

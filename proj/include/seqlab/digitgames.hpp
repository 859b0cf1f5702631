// Base-10 digit games: beastly numbers, reverse-and-add palindrome
// trajectories, multiplicative persistence, and the powertrain map.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqlab/numerics.hpp"

namespace seqlab::digitgames {

using numerics::Natural;

enum class TrajectoryStatus { kResolved, kCapReached };

// Iteration record for reverse-and-add. `iterates` always includes the start;
// when resolved, the final iterate is the first palindrome reached.
struct Trajectory {
  Natural start;
  std::vector<Natural> iterates;
  TrajectoryStatus status = TrajectoryStatus::kCapReached;

  bool resolved() const { return status == TrajectoryStatus::kResolved; }
  const Natural& final_value() const { return iterates.back(); }
};

// Whether a palindrome "never" arrives is undecidable; the cap turns that
// into an explicit CapReached status. 196 is not known to resolve at all.
inline constexpr int kDefaultPalindromeCap = 300;

inline constexpr uint64_t kDefaultPersistenceScanCeiling = 100'000'000;

// Abort guard for adversarial powertrain inputs (digit count of any
// intermediate product).
inline constexpr size_t kDefaultPowertrainDigitCap = 100'000;

bool is_beastly(const Natural& n);

// The k smallest numbers whose decimal digits contain the run 666, ascending.
std::vector<Natural> beastly_prefix(size_t k);

Trajectory palindrome_trajectory(const Natural& start,
                                 int cap = kDefaultPalindromeCap);

// Resolved palindrome for each start 0..k-1; nullopt where the cap was hit.
std::vector<std::optional<Natural>> a033865_prefix(
    size_t k, int cap = kDefaultPalindromeCap);

// Number of digit-product steps to reach a single digit.
int persistence(const Natural& n);

// Least n with persistence(n) == p. Plain ascending scan for p <= 8;
// nondecreasing-digit candidate enumeration for larger p.
Natural smallest_with_persistence(
    int p, uint64_t scan_ceiling = kDefaultPersistenceScanCeiling);

// Digits paired left to right as base/exponent; a trailing lone digit is a
// bare factor; 0^0 counts as 1; powertrain(0) is 0.
Natural powertrain(const Natural& n,
                   size_t digit_cap = kDefaultPowertrainDigitCap);

// All n <= limit with powertrain(n) == n, ascending.
std::vector<Natural> powertrain_fixed_points(const Natural& limit,
                                             int threads = 1);

namespace detail {

// Exposed for oracle cross-checks.
Natural smallest_with_persistence_scan(int p, uint64_t ceiling);
Natural smallest_with_persistence_candidates(int p, int max_digits);

}  // namespace detail

}  // namespace seqlab::digitgames

// Curling numbers, the append-curling-number generator, and the exhaustive
// best-tail search over initial strings of 2s and 3s.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace seqlab::curling {

// Symbols are positive integers; appended curling numbers can exceed 3.
using CurlString = std::vector<int>;

inline constexpr int kDefaultStepCap = 10'000;
inline constexpr int kDefaultExhaustiveBound = 24;

// Maximum k over decompositions S = X Y^k with Y nonempty: the repetition
// count of the best repeated suffix block. Linear-time suffix-period scan.
int curling_number(std::span<const int> s);

// First k terms of the sequence grown from "1" by appending curling numbers.
std::vector<int> gijswijt_prefix(size_t k);

struct TailResult {
  CurlString initial;
  CurlString extended;  // initial plus every appended symbol, ending in 1
  size_t tail_length = 0;  // length of the string just before the 1
};

// Appends curling numbers until a 1 appears. The initial string must be
// nonempty and free of 1s. Exceeding the step cap is surfaced loudly: it
// would be evidence against the conjecture, never silently truncated.
TailResult extend_until_one(const CurlString& initial,
                            int step_cap = kDefaultStepCap);

struct BestTailOptions {
  int threads = 1;
  int step_cap = kDefaultStepCap;
  int exhaustive_bound = kDefaultExhaustiveBound;
  std::string checkpoint_path;  // empty: no checkpointing
  std::function<void(size_t done, size_t total)> progress;  // per shard
};

struct BestTailResult {
  size_t tail_length = 0;
  CurlString witness;  // lexicographically smallest initial string attaining it
};

// Exhaustive maximum of extend_until_one over all 2^n strings in {2,3}^n.
// No symmetry assumptions: swapping 2s and 3s does not commute with the
// curling map.
BestTailResult best_tail(int n, const BestTailOptions& options = {});

}  // namespace seqlab::curling

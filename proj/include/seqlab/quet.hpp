// Prime-generating recurrence: a(0) = 2; a(n) is the smallest prime p not
// already in the sequence with n | a(n-1) + p.

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace seqlab::quet {

struct Config {
  // Residue-class scans error out past this candidate value. A failure here
  // would mean the sequence may terminate, which nobody has observed.
  uint64_t candidate_ceiling = 10'000'000'000ull;
};

class QuetSequence {
 public:
  explicit QuetSequence(Config config = {});

  // Appends and returns the next term.
  uint64_t next_term();
  const std::vector<uint64_t>& terms() const { return terms_; }
  bool is_used(uint64_t p) const { return used_.count(p) > 0; }

 private:
  Config config_;
  std::vector<uint64_t> terms_;
  std::unordered_set<uint64_t> used_;
};

// First k terms (indices 0..k-1).
std::vector<uint64_t> quet_prefix(size_t k, Config config = {});

// Ascending indices n <= limit with a(n) < n.
std::vector<uint64_t> small_indices(uint64_t limit, Config config = {});

}  // namespace seqlab::quet

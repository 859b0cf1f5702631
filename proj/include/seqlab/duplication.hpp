// Closure of a seed string under in-place substring duplication, with
// per-length counts of the distinct reachable strings.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace seqlab::duplication {

// Strings are plain byte strings over a small alphabet (digits suffice).

inline constexpr size_t kDefaultStringBudget = 20'000'000;

// All distinct strings obtained by duplicating one contiguous substring of s
// in place.
std::set<std::string> duplications(std::string_view s);

// Closure levels: level(n) holds every distinct string of length n reachable
// from the seed. Levels are built shortest-first so completed counts stay
// exact even if a later level exhausts the string budget.
class Closure {
 public:
  Closure(std::string seed, size_t max_len,
          size_t string_budget = kDefaultStringBudget);

  const std::vector<std::string>& level(size_t len) const;  // sorted
  size_t count(size_t len) const { return level(len).size(); }
  size_t seed_length() const { return seed_.size(); }
  size_t max_length() const { return max_len_; }

 private:
  std::string seed_;
  size_t max_len_;
  std::vector<std::vector<std::string>> levels_;  // index: len - seed length
};

// Count of distinct reachable strings per length |seed|..max_len.
std::vector<size_t> reachable_counts(std::string_view seed, size_t max_len,
                                     size_t string_budget = kDefaultStringBudget);

// Membership in the closure at length |s|.
bool is_reachable(std::string_view s, std::string_view seed,
                  size_t string_budget = kDefaultStringBudget);

// One level as text, one string per line, sorted lexicographically.
std::string dump_level(const Closure& closure, size_t len);

}  // namespace seqlab::duplication

#include "seqlab/duplication.hpp"

#include <algorithm>
#include <unordered_set>

#include "seqlab/errors.hpp"

namespace seqlab::duplication {

std::set<std::string> duplications(std::string_view s) {
  std::set<std::string> out;
  std::string buf;
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i; j < s.size(); ++j) {
      buf.assign(s.substr(0, j + 1));
      buf.append(s.substr(i, j - i + 1));
      buf.append(s.substr(j + 1));
      out.insert(buf);
    }
  }
  return out;
}

Closure::Closure(std::string seed, size_t max_len, size_t string_budget)
    : seed_(std::move(seed)), max_len_(max_len) {
  if (seed_.empty()) throw DomainError("duplication: seed must be nonempty");
  if (max_len < seed_.size()) {
    throw DomainError("duplication: max_len must be >= seed length");
  }
  const size_t base = seed_.size();
  levels_.resize(max_len - base + 1);
  levels_[0].push_back(seed_);
  size_t total = 1;
  std::string buf;
  for (size_t m = base + 1; m <= max_len; ++m) {
    std::unordered_set<std::string> next;
    // A length-m string arises from a length-l ancestor by duplicating a
    // substring of length m-l, which requires m-l <= l.
    for (size_t l = base; l < m; ++l) {
      const size_t k = m - l;
      if (k > l) continue;
      for (const std::string& s : levels_[l - base]) {
        for (size_t i = 0; i + k <= l; ++i) {
          buf.assign(s, 0, i + k);
          buf.append(s, i, k);
          buf.append(s, i + k, l - i - k);
          next.insert(buf);
        }
      }
    }
    total += next.size();
    if (total > string_budget) {
      throw MemoryBudgetError(
          "duplication closure: string budget exceeded at length " +
          std::to_string(m));
    }
    auto& level = levels_[m - base];
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
}

const std::vector<std::string>& Closure::level(size_t len) const {
  if (len < seed_.size() || len > max_len_) {
    throw DomainError("closure level out of range");
  }
  return levels_[len - seed_.size()];
}

std::vector<size_t> reachable_counts(std::string_view seed, size_t max_len,
                                     size_t string_budget) {
  Closure closure(std::string(seed), max_len, string_budget);
  std::vector<size_t> counts;
  counts.reserve(max_len - seed.size() + 1);
  for (size_t len = seed.size(); len <= max_len; ++len) {
    counts.push_back(closure.count(len));
  }
  return counts;
}

bool is_reachable(std::string_view s, std::string_view seed,
                  size_t string_budget) {
  if (s.size() < seed.size()) return false;
  if (s.size() == seed.size()) return s == seed;
  Closure closure(std::string(seed), s.size(), string_budget);
  const auto& level = closure.level(s.size());
  return std::binary_search(level.begin(), level.end(), std::string(s));
}

std::string dump_level(const Closure& closure, size_t len) {
  std::string out;
  for (const std::string& s : closure.level(len)) {
    out += s;
    out += '\n';
  }
  return out;
}

}  // namespace seqlab::duplication

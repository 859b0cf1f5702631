#include "seqlab/quet.hpp"

#include <numeric>

#include "seqlab/errors.hpp"
#include "seqlab/numerics.hpp"

namespace seqlab::quet {

QuetSequence::QuetSequence(Config config) : config_(config) {
  terms_.push_back(2);
  used_.insert(2);
}

uint64_t QuetSequence::next_term() {
  const uint64_t n = terms_.size();
  const uint64_t prev = terms_.back();
  const uint64_t residue = (n - prev % n) % n;
  uint64_t p = 0;
  const uint64_t g = residue == 0 ? n : std::gcd(residue, n);
  if (g > 1) {
    // Every class member is divisible by g: the only admissible prime is g
    // itself. (Dirichlet guarantees infinitely many only when gcd = 1.)
    if (!numerics::is_prime_u64(g) || g % n != residue || used_.count(g)) {
      throw BoundExhaustedError(
          "quet: no admissible prime at index " + std::to_string(n) +
          " (gcd(residue, n) = " + std::to_string(g) + ")");
    }
    p = g;
  } else {
    uint64_t start = 2;
    while (true) {
      p = numerics::next_prime_in_class_u64(start, residue, n,
                                            config_.candidate_ceiling);
      if (!used_.count(p)) break;
      start = p + 1;
    }
  }
  terms_.push_back(p);
  used_.insert(p);
  return p;
}

std::vector<uint64_t> quet_prefix(size_t k, Config config) {
  if (k < 1) throw DomainError("quet_prefix: count must be >= 1");
  QuetSequence seq(config);
  while (seq.terms().size() < k) seq.next_term();
  return {seq.terms().begin(), seq.terms().begin() + k};
}

std::vector<uint64_t> small_indices(uint64_t limit, Config config) {
  if (limit < 1) throw DomainError("small_indices: limit must be >= 1");
  QuetSequence seq(config);
  std::vector<uint64_t> indices;
  for (uint64_t n = 1; n <= limit; ++n) {
    if (seq.next_term() < n) indices.push_back(n);
  }
  return indices;
}

}  // namespace seqlab::quet

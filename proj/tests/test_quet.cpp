#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "seqlab/errors.hpp"
#include "seqlab/harness.hpp"
#include "seqlab/numerics.hpp"
#include "seqlab/quet.hpp"

using namespace seqlab;

TEST_CASE("quet prefix matches the fixture") {
  const auto& fixture = harness::bundled_fixture("A134204");
  const auto terms = quet::quet_prefix(fixture.terms.size());
  REQUIRE(terms.size() == fixture.terms.size());
  for (size_t i = 0; i < terms.size(); ++i) {
    CHECK(mpz_class(static_cast<unsigned long>(terms[i])) == fixture.terms[i]);
  }
  CHECK(terms[0] == 2);
  CHECK_THROWS_AS(quet::quet_prefix(0), DomainError);
}

TEST_CASE("quet invariants: divisibility, primality, distinctness, minimality") {
  const size_t count = 20'000;
  const auto terms = quet::quet_prefix(count);
  std::set<uint64_t> seen;
  for (size_t n = 0; n < count; ++n) {
    CHECK(numerics::is_prime_u64(terms[n]));
    CHECK(seen.insert(terms[n]).second);
    if (n >= 1) {
      CHECK((terms[n - 1] + terms[n]) % n == 0);
    }
  }

  // Minimality: every smaller prime in the admissible residue class was
  // already used at the time.
  std::set<uint64_t> used{terms[0]};
  for (size_t n = 1; n < 3000; ++n) {
    const uint64_t residue = (n - terms[n - 1] % n) % n;
    const uint64_t g = residue == 0 ? n : std::gcd(residue, n);
    if (g == 1) {
      uint64_t p = 0;
      while (true) {
        try {
          p = numerics::next_prime_in_class_u64(p + 1, residue, n, terms[n]);
        } catch (const BoundExhaustedError&) {
          break;
        }
        if (p >= terms[n]) break;
        CHECK(used.count(p) == 1);
      }
    } else {
      // The class holds a single prime, so the term had no alternative.
      CHECK(terms[n] == g);
    }
    used.insert(terms[n]);
  }
}

TEST_CASE("small term indices match the fixture") {
  const auto& fixture = harness::bundled_fixture("A133242");
  const auto indices = quet::small_indices(2100);
  REQUIRE(indices.size() == 10);
  for (size_t i = 0; i < indices.size(); ++i) {
    CHECK(mpz_class(static_cast<unsigned long>(indices[i])) ==
          fixture.terms[i]);
  }
  // Every reported index really has a small term, and no others do.
  const auto terms = quet::quet_prefix(2101);
  std::vector<uint64_t> expected;
  for (uint64_t n = 1; n <= 2100; ++n) {
    if (terms[n] < n) expected.push_back(n);
  }
  CHECK(indices == expected);
}

TEST_CASE("candidate ceiling is honored") {
  quet::Config tight;
  tight.candidate_ceiling = 10;
  CHECK_THROWS_AS(quet::quet_prefix(10, tight), BoundExhaustedError);

  quet::QuetSequence seq;
  CHECK(seq.terms() == std::vector<uint64_t>{2});
  CHECK(seq.next_term() == 3);
  CHECK(seq.next_term() == 5);
  CHECK(seq.is_used(3));
  CHECK_FALSE(seq.is_used(7));
}

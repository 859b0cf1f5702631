// Foundation arithmetic shared by the sequence modules: arbitrary-precision
// naturals (GMP), base-10 digit views, exact rationals, primes and divisor
// sums. Everything here is a pure function; values are safe to share.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace seqlab::numerics {

// Arbitrary-precision non-negative integer. All digit views are base 10,
// most significant digit first.
using Natural = mpz_class;

// Exact rational, always canonicalized (lowest terms, denominator >= 1).
using Rational = mpq_class;

// Trial-division factorization sieve bound.
inline constexpr uint32_t kFactorSieveBound = 1'000'000;

// is_prime is a deterministic Miller-Rabin test (bases 2..37), proven exact
// for all n below this bound; larger inputs are rejected.
const Natural& primality_range();

// Default scan ceiling for next_prime_in_class.
inline const Natural kDefaultPrimeScanCeiling = Natural(10'000'000'000L);

std::vector<int> to_digits(const Natural& n);
Natural from_digits(const std::vector<int>& digits);

Natural reverse_and_add(const Natural& n);
bool is_palindrome(const Natural& n);

Natural digit_product(const Natural& n);
uint64_t digit_product_u64(uint64_t n);

// Primes below kFactorSieveBound, ascending. Built once, then shared.
const std::vector<uint32_t>& small_primes();

// (prime, exponent) pairs, ascending by prime. Throws BoundExhaustedError if
// a composite remainder survives trial division by the sieved primes.
std::vector<std::pair<Natural, unsigned>> factorize(const Natural& n);

// Sum of divisors via the multiplicative formula. Rejects n = 0.
Natural sigma(const Natural& n);

// Exact nth harmonic number. Rejects n = 0.
Rational harmonic(uint64_t n);

bool is_prime_u64(uint64_t n);
bool is_prime(const Natural& n);

// Least prime p >= start with p ≡ residue (mod modulus). Requires
// 0 <= residue < modulus. Throws BoundExhaustedError when the scan passes
// `ceiling` or when the residue class provably contains no further prime.
uint64_t next_prime_in_class_u64(uint64_t start, uint64_t residue,
                                 uint64_t modulus, uint64_t ceiling);
Natural next_prime_in_class(const Natural& start, const Natural& residue,
                            const Natural& modulus,
                            const Natural& ceiling = kDefaultPrimeScanCeiling);

}  // namespace seqlab::numerics

#include "seqlab/numerics.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "seqlab/errors.hpp"

namespace seqlab::numerics {

namespace {

// Miller-Rabin with this base set is deterministic below 3.317e24
// (Sorenson & Webster).
constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool mr_witness_u64(uint64_t n, uint64_t a, uint64_t d, int r) {
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

const Natural& primality_range() {
  static const Natural bound("3317044064679887385961981", 10);
  return bound;
}

std::vector<int> to_digits(const Natural& n) {
  const std::string s = n.get_str();
  std::vector<int> digits;
  digits.reserve(s.size());
  for (char c : s) digits.push_back(c - '0');
  return digits;
}

Natural from_digits(const std::vector<int>& digits) {
  Natural n = 0;
  for (int d : digits) {
    n *= 10;
    n += d;
  }
  return n;
}

Natural reverse_and_add(const Natural& n) {
  std::string s = n.get_str();
  std::reverse(s.begin(), s.end());
  // Leading zeros created by the reversal vanish when the string is re-read.
  return n + Natural(s, 10);
}

bool is_palindrome(const Natural& n) {
  const std::string s = n.get_str();
  return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin());
}

Natural digit_product(const Natural& n) {
  Natural product = 1;
  for (int d : to_digits(n)) {
    if (d == 0) return Natural(0);
    product *= d;
  }
  return product;
}

uint64_t digit_product_u64(uint64_t n) {
  uint64_t product = 1;
  do {
    product *= n % 10;
    n /= 10;
  } while (n > 0 && product > 0);
  return product;
}

const std::vector<uint32_t>& small_primes() {
  static std::vector<uint32_t> primes;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<bool> composite(kFactorSieveBound + 1, false);
    for (uint64_t p = 2; p <= kFactorSieveBound; ++p) {
      if (composite[p]) continue;
      primes.push_back(static_cast<uint32_t>(p));
      for (uint64_t q = p * p; q <= kFactorSieveBound; q += p) composite[q] = true;
    }
  });
  return primes;
}

std::vector<std::pair<Natural, unsigned>> factorize(const Natural& n) {
  if (n <= 0) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<Natural, unsigned>> factors;
  Natural rest = n;
  for (uint32_t p : small_primes()) {
    if (Natural(p) * p > rest) break;
    unsigned exp = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exp;
    }
    if (exp > 0) factors.emplace_back(Natural(p), exp);
    if (rest == 1) return factors;
  }
  if (rest > 1) {
    // Any remainder below sieve_bound^2 is prime; beyond that, accept it only
    // if the deterministic test confirms primality.
    if (!is_prime(rest)) {
      throw BoundExhaustedError(
          "factorize: composite remainder above the sieve bound for " +
          n.get_str());
    }
    factors.emplace_back(rest, 1);
  }
  return factors;
}

Natural sigma(const Natural& n) {
  if (n <= 0) throw DomainError("sigma: argument must be positive");
  Natural result = 1;
  for (const auto& [p, exp] : factorize(n)) {
    Natural power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), exp + 1);
    result *= (power - 1) / (p - 1);
  }
  return result;
}

Rational harmonic(uint64_t n) {
  if (n == 0) throw DomainError("harmonic: argument must be positive");
  Rational sum(0);
  for (uint64_t k = 1; k <= n; ++k) {
    sum += Rational(1, static_cast<unsigned long>(k));
  }
  return sum;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : kMrBases) {
    if (mr_witness_u64(n, a, d, r)) return false;
  }
  return true;
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  if (n >= primality_range()) {
    throw BoundExhaustedError("is_prime: deterministic range ends at " +
                              primality_range().get_str());
  }
  for (uint64_t p : kMrBases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Natural d = n - 1;
  int r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  const Natural n_minus_1 = n - 1;
  for (uint64_t a : kMrBases) {
    Natural x, base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t next_prime_in_class_u64(uint64_t start, uint64_t residue,
                                 uint64_t modulus, uint64_t ceiling) {
  if (modulus == 0 || residue >= modulus) {
    throw DomainError("next_prime_in_class: need 0 <= residue < modulus");
  }
  const uint64_t g = residue == 0 ? modulus : std::gcd(residue, modulus);
  if (g > 1) {
    // Every member of the class is divisible by g, so g is the only prime
    // the class can contain.
    if (g >= start && g % modulus == residue && is_prime_u64(g)) return g;
    throw BoundExhaustedError(
        "next_prime_in_class: residue class holds no further prime");
  }
  uint64_t c = std::max<uint64_t>(start, 2);
  const uint64_t off = static_cast<uint64_t>(
      (static_cast<__uint128_t>(residue) + modulus - c % modulus) % modulus);
  if (c > ceiling || off > ceiling - c) {
    throw BoundExhaustedError("next_prime_in_class: scan ceiling reached");
  }
  c += off;
  while (true) {
    if (is_prime_u64(c)) return c;
    if (ceiling - c < modulus) {
      throw BoundExhaustedError("next_prime_in_class: scan ceiling reached");
    }
    c += modulus;
  }
}

Natural next_prime_in_class(const Natural& start, const Natural& residue,
                            const Natural& modulus, const Natural& ceiling) {
  if (modulus <= 0 || residue < 0 || residue >= modulus) {
    throw DomainError("next_prime_in_class: need 0 <= residue < modulus");
  }
  if (start.fits_ulong_p() && residue.fits_ulong_p() &&
      modulus.fits_ulong_p() && ceiling.fits_ulong_p()) {
    return Natural(next_prime_in_class_u64(start.get_ui(), residue.get_ui(),
                                           modulus.get_ui(), ceiling.get_ui()));
  }
  Natural g;
  if (residue == 0) {
    g = modulus;
  } else {
    mpz_gcd(g.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
  }
  if (g > 1) {
    if (g >= start && g % modulus == residue && is_prime(g)) return g;
    throw BoundExhaustedError(
        "next_prime_in_class: residue class holds no further prime");
  }
  Natural c = std::max(start, Natural(2));
  Natural off = (residue - c) % modulus;
  if (off < 0) off += modulus;
  c += off;
  for (; c <= ceiling; c += modulus) {
    if (is_prime(c)) return c;
  }
  throw BoundExhaustedError("next_prime_in_class: scan ceiling reached");
}

}  // namespace seqlab::numerics

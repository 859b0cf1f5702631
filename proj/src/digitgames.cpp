#include "seqlab/digitgames.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>

#include "seqlab/errors.hpp"

namespace seqlab::digitgames {

namespace {

int persistence_u64(uint64_t n) {
  int steps = 0;
  while (n >= 10) {
    n = numerics::digit_product_u64(n);
    ++steps;
  }
  return steps;
}

// pow_table[b][e] = b^e with 0^0 = 1. Largest entry 9^9 = 387420489.
using PowTable = std::array<std::array<uint64_t, 10>, 10>;

constexpr PowTable make_pow_table() {
  PowTable t{};
  for (int b = 0; b < 10; ++b) {
    uint64_t v = 1;
    for (int e = 0; e < 10; ++e) {
      t[b][e] = v;
      v *= static_cast<uint64_t>(b);
    }
  }
  t[0][0] = 1;
  return t;
}

constexpr PowTable kPow = make_pow_table();

// Fixed-point scan over [lo, hi] using an LSB-first digit odometer so no
// divisions happen in the hot loop. Safe for hi <= ~4.7e10 (abort check
// keeps the running product below 2^64).
std::vector<uint64_t> fixed_points_in_range(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> found;
  std::array<int, 24> d{};
  int len = 1;
  {
    uint64_t v = lo;
    len = 0;
    do {
      d[len++] = static_cast<int>(v % 10);
      v /= 10;
    } while (v > 0);
  }
  for (uint64_t n = lo;; ++n) {
    uint64_t acc = 1;
    int j = len - 1;
    for (; j >= 1; j -= 2) {
      acc *= kPow[d[j]][d[j - 1]];
      if (acc > n || acc == 0) break;
    }
    if (j == 0) acc *= static_cast<uint64_t>(d[0]);
    if (acc == n) found.push_back(n);
    if (n == hi) break;
    int i = 0;
    while (d[i] == 9) d[i++] = 0;
    ++d[i];
    if (i == len) ++len;
  }
  return found;
}

}  // namespace

bool is_beastly(const Natural& n) {
  return n.get_str().find("666") != std::string::npos;
}

std::vector<Natural> beastly_prefix(size_t k) {
  std::vector<Natural> result;
  result.reserve(k);
  for (uint64_t n = 666; result.size() < k; ++n) {
    if (std::to_string(n).find("666") != std::string::npos) {
      result.emplace_back(static_cast<unsigned long>(n));
    }
  }
  return result;
}

Trajectory palindrome_trajectory(const Natural& start, int cap) {
  if (cap < 1) throw DomainError("palindrome_trajectory: cap must be >= 1");
  Trajectory t;
  t.start = start;
  t.iterates.push_back(start);
  if (numerics::is_palindrome(start)) {
    t.status = TrajectoryStatus::kResolved;
    return t;
  }
  for (int step = 0; step < cap; ++step) {
    t.iterates.push_back(numerics::reverse_and_add(t.iterates.back()));
    if (numerics::is_palindrome(t.iterates.back())) {
      t.status = TrajectoryStatus::kResolved;
      return t;
    }
  }
  t.status = TrajectoryStatus::kCapReached;
  return t;
}

std::vector<std::optional<Natural>> a033865_prefix(size_t k, int cap) {
  std::vector<std::optional<Natural>> result;
  result.reserve(k);
  for (size_t n = 0; n < k; ++n) {
    Trajectory t = palindrome_trajectory(Natural(static_cast<unsigned long>(n)), cap);
    if (t.resolved()) {
      result.emplace_back(t.final_value());
    } else {
      result.emplace_back(std::nullopt);
    }
  }
  return result;
}

int persistence(const Natural& n) {
  if (n.fits_ulong_p()) return persistence_u64(n.get_ui());
  Natural v = numerics::digit_product(n);
  int steps = 1;
  while (v >= 10) {
    if (v.fits_ulong_p()) return steps + persistence_u64(v.get_ui());
    v = numerics::digit_product(v);
    ++steps;
  }
  return steps;
}

namespace detail {

Natural smallest_with_persistence_scan(int p, uint64_t ceiling) {
  for (uint64_t n = 0; n <= ceiling; ++n) {
    if (persistence_u64(n) == p) return Natural(static_cast<unsigned long>(n));
  }
  throw BoundExhaustedError("smallest_with_persistence: search bound exhausted");
}

// Candidate enumeration for p >= 2: the minimal number has digits in {2..9},
// nondecreasing (zeros kill persistence, ones only pad, sorting minimizes).
// Within one digit count, lexicographic tuple order equals numeric order.
Natural smallest_with_persistence_candidates(int p, int max_digits) {
  std::vector<int> digits;
  for (int len = 2; len <= max_digits; ++len) {
    digits.assign(len, 2);
    while (true) {
      Natural n = numerics::from_digits(digits);
      if (persistence(n) == p) return n;
      int i = len - 1;
      while (i >= 0 && digits[i] == 9) --i;
      if (i < 0) break;
      const int next = digits[i] + 1;
      for (int j = i; j < len; ++j) digits[j] = next;
    }
  }
  throw BoundExhaustedError("smallest_with_persistence: search bound exhausted");
}

}  // namespace detail

Natural smallest_with_persistence(int p, uint64_t scan_ceiling) {
  if (p < 1) throw DomainError("smallest_with_persistence: p must be >= 1");
  if (p <= 8) return detail::smallest_with_persistence_scan(p, scan_ceiling);
  return detail::smallest_with_persistence_candidates(p, 25);
}

Natural powertrain(const Natural& n, size_t digit_cap) {
  const std::vector<int> digits = numerics::to_digits(n);
  const size_t len = digits.size();
  Natural result = 1;
  for (size_t i = 0; i < len; i += 2) {
    if (i + 1 < len) {
      const int base = digits[i], exp = digits[i + 1];
      if (base == 0 && exp > 0) return Natural(0);
      result *= kPow[base][exp];
    } else {
      result *= digits[i];
    }
    if (result == 0) return result;
    if (mpz_sizeinbase(result.get_mpz_t(), 10) > digit_cap) {
      throw BoundExhaustedError("powertrain: intermediate exceeds " +
                                std::to_string(digit_cap) + " digits");
    }
  }
  return result;
}

std::vector<Natural> powertrain_fixed_points(const Natural& limit, int threads) {
  if (limit < 0) throw DomainError("powertrain_fixed_points: negative limit");
  // u64 odometer path; the abort check bounds the running product only while
  // limit * 9^9 fits in 64 bits.
  if (limit.fits_ulong_p() && limit.get_ui() <= 40'000'000'000ull) {
    const uint64_t hi = limit.get_ui();
    const int workers = std::max(1, threads);
    std::vector<std::vector<uint64_t>> parts(workers);
    if (workers == 1 || hi < 1000) {
      parts[0] = fixed_points_in_range(0, hi);
    } else {
      std::vector<std::thread> pool;
      const uint64_t chunk = hi / workers + 1;
      for (int w = 0; w < workers; ++w) {
        const uint64_t lo = chunk * w;
        const uint64_t up = std::min(hi, chunk * (w + 1) - 1);
        if (lo > hi) break;
        pool.emplace_back([&parts, w, lo, up] {
          parts[w] = fixed_points_in_range(lo, up);
        });
      }
      for (auto& t : pool) t.join();
    }
    std::vector<Natural> result;
    for (const auto& part : parts) {
      for (uint64_t v : part) result.emplace_back(static_cast<unsigned long>(v));
    }
    return result;
  }
  std::vector<Natural> result;
  for (Natural n = 0; n <= limit; ++n) {
    if (powertrain(n) == n) result.push_back(n);
  }
  return result;
}

}  // namespace seqlab::digitgames

#pragma once

#include <mpfr.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "seqlab/numerics.hpp"

namespace seqlab::lagarias {

inline constexpr long kDefaultStartPrecision = 128;
inline constexpr long kDefaultPrecisionCeiling = 8192;

// Outward-rounded enclosure [lower, upper] of a real value: the true value is
// guaranteed to lie inside, at any working precision.
class CertifiedReal {
 public:
  CertifiedReal(const CertifiedReal& other);
  CertifiedReal(CertifiedReal&& other) noexcept;
  CertifiedReal& operator=(const CertifiedReal& other);
  CertifiedReal& operator=(CertifiedReal&& other) noexcept;
  ~CertifiedReal();

  long precision() const;
  double lower() const;  // rounded toward -inf
  double upper() const;  // rounded toward +inf
  double width() const;  // upper - lower, rounded up
  numerics::Natural floor_lower() const;
  numerics::Natural floor_upper() const;
  bool contains(double x) const;
  // True when `tighter` lies entirely inside this enclosure.
  bool encloses(const CertifiedReal& tighter) const;

 private:
  explicit CertifiedReal(long precision);
  friend CertifiedReal lhs_enclosure_from_h(const numerics::Rational& h,
                                            long precision);

  mpfr_t lo_;
  mpfr_t hi_;
};

// Enclosure of H(n) + exp(H(n)) * log(H(n)), built from the exact rational
// H(n) with every rounding directed outward.
CertifiedReal lhs_enclosure(uint64_t n, long precision = kDefaultStartPrecision);
CertifiedReal lhs_enclosure_from_h(const numerics::Rational& h, long precision);

struct PrecisionPolicy {
  long start = kDefaultStartPrecision;
  long ceiling = kDefaultPrecisionCeiling;
};

struct FloorResult {
  numerics::Natural value;
  long precision_used = 0;
};

// Unique integer floor of the enclosed value. While the enclosure straddles
// an integer, `retry` re-evaluates at double the precision; past `ceiling`
// PrecisionCeilingError is thrown (a straddle is never silently rounded).
using Reevaluate = std::function<CertifiedReal(long precision)>;
FloorResult certified_floor(const CertifiedReal& x, const Reevaluate& retry,
                            long ceiling = kDefaultPrecisionCeiling);

// floor(H(n) + exp(H(n)) * log(H(n))) with escalation handled internally.
FloorResult certified_floor_at(uint64_t n, PrecisionPolicy policy = {});
FloorResult certified_floor_from_h(const numerics::Rational& h,
                                   PrecisionPolicy policy = {});

// a(n) = floor(H(n) + exp(H(n)) * log(H(n))) - sigma(n), n = 1..k.
struct PrefixResult {
  std::vector<mpz_class> terms;
  long max_precision_used = 0;
};
PrefixResult a057641_prefix(size_t k, PrecisionPolicy policy = {});

// Scans n = 1..limit for a(n) < 0. A hit would refute the Riemann
// hypothesis, so first_violation is expected to stay empty.
struct ScanResult {
  std::optional<uint64_t> first_violation;
  long max_precision_used = 0;
};
ScanResult check_nonnegative(uint64_t limit, int threads = 1,
                             PrecisionPolicy policy = {});

}  // namespace seqlab::lagarias

#include "seqlab/lagarias.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "seqlab/errors.hpp"

namespace seqlab::lagarias {

using numerics::Natural;
using numerics::Rational;

CertifiedReal::CertifiedReal(long precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
}

CertifiedReal::CertifiedReal(const CertifiedReal& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDN);
  mpfr_set(hi_, other.hi_, MPFR_RNDN);
}

CertifiedReal::CertifiedReal(CertifiedReal&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDN);
    mpfr_set(hi_, other.hi_, MPFR_RNDN);
  }
  return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

CertifiedReal::~CertifiedReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

long CertifiedReal::precision() const { return mpfr_get_prec(lo_); }

double CertifiedReal::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double CertifiedReal::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double CertifiedReal::width() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

Natural CertifiedReal::floor_lower() const {
  Natural out;
  mpfr_get_z(out.get_mpz_t(), lo_, MPFR_RNDD);
  return out;
}

Natural CertifiedReal::floor_upper() const {
  Natural out;
  mpfr_get_z(out.get_mpz_t(), hi_, MPFR_RNDD);
  return out;
}

bool CertifiedReal::contains(double x) const {
  return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool CertifiedReal::encloses(const CertifiedReal& tighter) const {
  return mpfr_cmp(lo_, tighter.lo_) <= 0 && mpfr_cmp(tighter.hi_, hi_) <= 0;
}

CertifiedReal lhs_enclosure_from_h(const Rational& h, long precision) {
  if (h < 1) {
    throw DomainError("lhs_enclosure: harmonic argument below 1");
  }
  CertifiedReal out(precision);
  mpfr_set_q(out.lo_, h.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, h.get_mpq_t(), MPFR_RNDU);

  mpfr_t e_lo, e_hi, l_lo, l_hi;
  mpfr_inits2(precision, e_lo, e_hi, l_lo, l_hi, (mpfr_ptr) nullptr);
  mpfr_exp(e_lo, out.lo_, MPFR_RNDD);
  mpfr_exp(e_hi, out.hi_, MPFR_RNDU);
  mpfr_log(l_lo, out.lo_, MPFR_RNDD);
  mpfr_log(l_hi, out.hi_, MPFR_RNDU);
  // h >= 1, so exp and log bounds are nonnegative and multiply monotonically.
  mpfr_mul(e_lo, e_lo, l_lo, MPFR_RNDD);
  mpfr_mul(e_hi, e_hi, l_hi, MPFR_RNDU);
  mpfr_add(out.lo_, out.lo_, e_lo, MPFR_RNDD);
  mpfr_add(out.hi_, out.hi_, e_hi, MPFR_RNDU);
  mpfr_clears(e_lo, e_hi, l_lo, l_hi, (mpfr_ptr) nullptr);
  return out;
}

CertifiedReal lhs_enclosure(uint64_t n, long precision) {
  if (n < 1) throw DomainError("lhs_enclosure: n must be >= 1");
  return lhs_enclosure_from_h(numerics::harmonic(n), precision);
}

FloorResult certified_floor(const CertifiedReal& x, const Reevaluate& retry,
                            long ceiling) {
  Natural lo = x.floor_lower();
  Natural hi = x.floor_upper();
  long prec = x.precision();
  if (lo == hi) return {lo, prec};
  while (prec < ceiling) {
    prec = std::min(prec * 2, ceiling);
    const CertifiedReal next = retry(prec);
    lo = next.floor_lower();
    hi = next.floor_upper();
    if (lo == hi) return {lo, prec};
  }
  throw PrecisionCeilingError(
      "certified_floor: enclosure still straddles an integer at " +
      std::to_string(prec) + " bits");
}

FloorResult certified_floor_from_h(const Rational& h, PrecisionPolicy policy) {
  auto eval = [&h](long p) { return lhs_enclosure_from_h(h, p); };
  return certified_floor(eval(policy.start), eval, policy.ceiling);
}

FloorResult certified_floor_at(uint64_t n, PrecisionPolicy policy) {
  if (n < 1) throw DomainError("certified_floor_at: n must be >= 1");
  return certified_floor_from_h(numerics::harmonic(n), policy);
}

PrefixResult a057641_prefix(size_t k, PrecisionPolicy policy) {
  if (k < 1) throw DomainError("a057641_prefix: count must be >= 1");
  PrefixResult out;
  out.terms.reserve(k);
  Rational h(0);
  for (uint64_t n = 1; n <= k; ++n) {
    h += Rational(1, n);
    const FloorResult f = certified_floor_from_h(h, policy);
    out.max_precision_used = std::max(out.max_precision_used, f.precision_used);
    out.terms.push_back(f.value - numerics::sigma(Natural(n)));
  }
  return out;
}

namespace {

void scan_range(uint64_t lo, uint64_t hi, const PrecisionPolicy& policy,
                std::optional<uint64_t>& violation, long& max_prec) {
  Rational h(0);
  for (uint64_t k = 1; k < lo; ++k) h += Rational(1, k);
  for (uint64_t n = lo; n <= hi; ++n) {
    h += Rational(1, n);
    const FloorResult f = certified_floor_from_h(h, policy);
    max_prec = std::max(max_prec, f.precision_used);
    if (f.value - numerics::sigma(Natural(n)) < 0) {
      violation = n;
      return;
    }
  }
}

}  // namespace

ScanResult check_nonnegative(uint64_t limit, int threads,
                             PrecisionPolicy policy) {
  if (limit < 1) throw DomainError("check_nonnegative: limit must be >= 1");
  if (threads < 1) threads = 1;

  const uint64_t workers = std::min<uint64_t>(static_cast<uint64_t>(threads),
                                              limit);
  ScanResult out;
  if (workers <= 1) {
    scan_range(1, limit, policy, out.first_violation, out.max_precision_used);
    return out;
  }

  const uint64_t chunk = (limit + workers - 1) / workers;
  std::vector<std::optional<uint64_t>> violations(workers);
  std::vector<long> precs(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (uint64_t w = 0; w < workers; ++w) {
    const uint64_t lo = w * chunk + 1;
    if (lo > limit) break;
    const uint64_t hi = std::min(limit, lo + chunk - 1);
    pool.emplace_back([&policy, &violations, &precs, &errors, w, lo, hi] {
      try {
        scan_range(lo, hi, policy, violations[w], precs[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  // Chunks cover ascending ranges, so the first hit in chunk order is the
  // global minimum index.
  for (uint64_t w = 0; w < workers; ++w) {
    out.max_precision_used = std::max(out.max_precision_used, precs[w]);
    if (!out.first_violation && violations[w]) out.first_violation = violations[w];
  }
  return out;
}

}  // namespace seqlab::lagarias

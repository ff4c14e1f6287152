#include "niemytzki/sampling.hpp"

#include "niemytzki/errors.hpp"

namespace niemytzki {

namespace {

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Rat RationalSampler::closed(const Rat& lo, const Rat& hi) { return draw(lo, hi, false); }

Rat RationalSampler::open(const Rat& lo, const Rat& hi) { return draw(lo, hi, true); }

Rat RationalSampler::draw(const Rat& lo, const Rat& hi, bool strict) {
  if (hi < lo || (strict && hi == lo)) throw DomainError("empty sampling interval");
  if (!strict && lo == hi) return lo;
  // Retry until the chosen denominator admits a numerator in range; the
  // largest denominators always do for any non-degenerate interval.
  for (int attempt = 0;; ++attempt) {
    const long d = attempt < 64 ? integer(1, max_den_) : max_den_ * (attempt - 62);
    const mpz_class den = d;
    // num/d in [lo, hi]  <=>  lo.num*d/lo.den <= num <= hi.num*d/hi.den
    mpz_class first = ceil_div(lo.num() * den, lo.den());
    mpz_class last = floor_div(hi.num() * den, hi.den());
    if (strict) {
      if (Rat(mpq_class(first, den)) == lo) first += 1;
      if (Rat(mpq_class(last, den)) == hi) last -= 1;
    }
    if (first > last) continue;
    const mpz_class span = last - first;
    mpz_class offset;
    if (span.fits_slong_p()) {
      offset = integer(0, span.get_si());
    } else {
      offset = span / 2;
    }
    return Rat(mpq_class(first + offset, den));
  }
}

}  // namespace niemytzki

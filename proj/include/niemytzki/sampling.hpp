#pragma once

#include <cstdint>
#include <random>

#include "niemytzki/rational.hpp"

namespace niemytzki {

/// Seeded source of rationals with bounded denominators. Identical seeds give
/// identical streams.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long max_den = 10000) : rng_(seed), max_den_(max_den) {}

  /// Uniform-ish rational in the closed interval [lo, hi].
  Rat closed(const Rat& lo, const Rat& hi);
  /// Rational in the open interval (lo, hi); requires lo < hi.
  Rat open(const Rat& lo, const Rat& hi);

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  long max_den() const { return max_den_; }
  std::mt19937_64& engine() { return rng_; }

 private:
  Rat draw(const Rat& lo, const Rat& hi, bool strict);

  std::mt19937_64 rng_;
  long max_den_;
};

}  // namespace niemytzki

#pragma once

// Reference implementations used only by tests. They work on machine
// integers and share no code with the library.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

/// Middle-thirds Cantor membership of p/q in [0,1] by long division in base 3.
/// The greedy expansion is unique unless it terminates; a terminating
/// expansion ending in digit 1 also has the form ...0222..., which is in C
/// when every earlier digit is 0 or 2.
inline bool cantor_digits(std::int64_t p, std::int64_t q) {
  if (p == q) return true;  // 1 = 0.222..._3
  std::int64_t r = p;
  for (std::int64_t step = 0; step <= 2 * q + 2; ++step) {
    const std::int64_t digit = (3 * r) / q;
    r = (3 * r) % q;
    if (digit == 1) return r == 0;
    if (r == 0) return true;
  }
  return true;  // periodic with digits in {0,2}
}

/// Reduced fraction for cross-checking Rat arithmetic on small values.
struct Frac {
  std::int64_t num;
  std::int64_t den;

  Frac(std::int64_t n, std::int64_t d) {
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
  }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
};

}  // namespace oracle

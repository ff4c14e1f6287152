#include "niemytzki/rational.hpp"

#include <cctype>

#include "niemytzki/errors.hpp"

namespace niemytzki {

Rat::Rat(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t num_begin = pos;
  pos = scan_digits(text, pos);
  if (pos == num_begin) throw ParseError(pos, "expected digits");
  mpz_class num(std::string(text.substr(num_begin, pos - num_begin)), 10);
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == den_begin) throw ParseError(pos, "expected denominator digits");
    den = mpz_class(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (den == 0) throw ParseError(den_begin, "zero denominator");
  }
  if (pos != text.size()) throw ParseError(pos, "unexpected character in rational");
  if (negative) num = -num;
  return Rat(mpq_class(num, den));
}

Rat sqrt_floor(const Rat& m) {
  if (m.sign() <= 0) throw DomainError("sqrt_floor requires a positive argument");
  const mpz_class pq = m.num() * m.den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  return Rat(mpq_class(root, m.den()));
}

mpz_class floor(const Rat& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

}  // namespace niemytzki

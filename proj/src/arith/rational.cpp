#include "canmap/arith/rational.hpp"

#include <stdexcept>

namespace canmap {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::domain_error("zero denominator in rational literal: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::uint32_t rational_mod(const Rational& q, std::uint32_t p) {
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) {
    throw std::domain_error("prime " + std::to_string(p) + " divides the denominator of " +
                            to_string(q));
  }
  Integer inv;
  Integer mod(p);
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer r = (num * inv) % mod;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace canmap

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "canmap/arith/rational.hpp"

namespace canmap {

// Element of GF(p) for an odd prime p < 2^32; carries its modulus.
class Fp {
 public:
  Fp(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp& operator+=(const Fp& b) {
    check(b);
    std::uint64_t s = std::uint64_t{v_} + b.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& b) {
    check(b);
    v_ = v_ >= b.v_ ? v_ - b.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - b.v_);
    return *this;
  }
  Fp& operator*=(const Fp& b) {
    check(b);
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * b.v_ % p_);
    return *this;
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator-(Fp a) {
    a.v_ = a.v_ == 0 ? 0 : a.p_ - a.v_;
    return a;
  }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Fp& b) const {
    if (p_ != b.p_) throw std::invalid_argument("operands belong to different prime fields");
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

Fp inverse(const Fp& a);
inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

class PrimeField {
 public:
  using Element = Fp;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_int(long v) const;
  Element from_rational(const Rational& q) const { return Fp(rational_mod(q, p_), p_); }

  unsigned long characteristic() const { return p_; }
  std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

namespace modp {

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Dense univariate polynomials over GF(p), coefficients low to high, trimmed.
using UPoly = std::vector<std::uint64_t>;

UPoly gcd(UPoly a, UPoly b, std::uint64_t p);
UPoly derivative(const UPoly& f, std::uint64_t p);
bool is_squarefree(const UPoly& f, std::uint64_t p);
// All distinct roots in [0, p), ascending. Deterministic.
std::vector<std::uint64_t> roots(const UPoly& f, std::uint64_t p);

}  // namespace modp

}  // namespace canmap

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace canmap {

// Seven projective coordinates plus one auxiliary variable for elimination.
inline constexpr std::size_t kMaxVariables = 8;

struct Monomial {
  using Exponent = std::uint16_t;

  std::array<Exponent, kMaxVariables> exps{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.exps.at(i) = checked(power);
    m.degree = power;
    return m;
  }

  static Exponent checked(unsigned long e) {
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    return static_cast<Exponent>(e);
  }

  Exponent operator[](std::size_t i) const { return exps[i]; }

  bool divides(const Monomial& other) const {
    if (degree > other.degree) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps[i] > other.exps[i]) return false;
    }
    return true;
  }

  bool is_one() const { return degree == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exps[i] = checked(static_cast<unsigned long>(a.exps[i]) + b.exps[i]);
    }
    m.degree = a.degree + b.degree;
    return m;
  }

  // a / b; requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps[i] = a.exps[i] - b.exps[i];
    m.degree = a.degree - b.degree;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exps[i] = std::max(a.exps[i], b.exps[i]);
      m.degree += m.exps[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exps[i] && b.exps[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exps) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

// All monomials of total degree d in the first n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace canmap

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "canmap/arith/field_tower.hpp"
#include "canmap/arith/prime_field.hpp"
#include "canmap/arith/tower_element.hpp"

namespace canmap {

class InvalidReduction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ring homomorphism from a tower onto GF(p) sending each generator to a
// root of its (reduced) minimal polynomial.
class PrimeReduction {
 public:
  // Uses the smallest nonnegative root at every step. Throws InvalidReduction
  // when p is not an odd prime, divides a denominator of a minimal polynomial,
  // or some reduced minimal polynomial is not squarefree or has no root.
  static PrimeReduction create(TowerPtr tower, std::uint32_t p);

  // Explicit generator images; validated the same way.
  static PrimeReduction create(TowerPtr tower, std::uint32_t p, std::vector<std::uint32_t> images);

  // The first `count` valid primes >= floor, ascending.
  static std::vector<PrimeReduction> select(TowerPtr tower, std::uint32_t floor, std::size_t count);

  std::uint32_t prime() const { return p_; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  const TowerPtr& tower() const { return tower_; }
  PrimeField field() const { return PrimeField(p_); }

  // Throws std::domain_error if p divides a denominator of a.
  Fp reduce(const TowerElement& a) const;

 private:
  PrimeReduction(TowerPtr tower, std::uint32_t p) : tower_(std::move(tower)), p_(p) {}
  void build(const std::vector<std::uint32_t>* forced_images);

  TowerPtr tower_;
  std::uint32_t p_;
  std::vector<std::uint32_t> images_;
  std::vector<std::uint32_t> basis_images_;
};

}  // namespace canmap

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "canmap/arith/rational.hpp"

namespace canmap {

// Dense coefficient vector over the monomial basis of a tower (or a prefix of it).
// Index layout: the lowest generator varies fastest.
using DenseCoeffs = std::vector<Rational>;

struct TowerStep {
  std::string name;
  // Coefficients c_0..c_d of the monic minimal polynomial, each an element of
  // the tower formed by the preceding steps (length = that tower's degree).
  std::vector<DenseCoeffs> minpoly;

  std::size_t degree() const { return minpoly.empty() ? 0 : minpoly.size() - 1; }
};

// Q(g_1)(g_2)...(g_k), each g_i given by a monic minimal polynomial over the
// previous field. The empty tower is Q.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> rationals();
  static std::shared_ptr<const FieldTower> create(std::vector<TowerStep> steps);

  std::size_t degree() const { return strides_.back(); }
  std::size_t num_steps() const { return steps_.size(); }
  const TowerStep& step(std::size_t i) const { return steps_.at(i); }
  const std::vector<TowerStep>& steps() const { return steps_; }
  // Degree of the subfield generated by the first `level` steps.
  std::size_t level_degree(std::size_t level) const { return strides_.at(level); }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  // Tower consisting of the first `level` steps.
  std::shared_ptr<const FieldTower> prefix(std::size_t level) const;

  bool same_as(const FieldTower& other) const;

  // Arithmetic on dense vectors of the full tower; results are in normal form.
  DenseCoeffs multiply(std::span<const Rational> a, std::span<const Rational> b) const {
    return multiply_at(num_steps(), a, b);
  }
  // Throws std::domain_error for zero (or a zero divisor if a minimal
  // polynomial is reducible).
  DenseCoeffs inverse(std::span<const Rational> a) const { return inverse_at(num_steps(), a); }

  DenseCoeffs generator(std::size_t i) const;

  // Exponent of generator `step` in basis element `index`.
  std::size_t basis_exponent(std::size_t index, std::size_t step) const;
  std::string basis_name(std::size_t index) const;

 private:
  explicit FieldTower(std::vector<TowerStep> steps);

  DenseCoeffs multiply_at(std::size_t level, std::span<const Rational> a,
                          std::span<const Rational> b) const;
  DenseCoeffs inverse_at(std::size_t level, std::span<const Rational> a) const;

  std::vector<TowerStep> steps_;
  std::vector<std::size_t> strides_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

}  // namespace canmap

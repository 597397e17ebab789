#pragma once

#include <memory>
#include <string>
#include <vector>

#include "canmap/arith/field_tower.hpp"
#include "canmap/arith/rational.hpp"

namespace canmap {

// Exact element of a FieldTower, always stored in normal form.
class TowerElement {
 public:
  TowerElement(TowerPtr tower, DenseCoeffs coeffs);
  TowerElement(TowerPtr tower, const Rational& q);

  const TowerPtr& tower() const { return tower_; }
  const DenseCoeffs& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True if the element lies in Q.
  bool is_rational() const;

  TowerElement& operator+=(const TowerElement& b);
  TowerElement& operator-=(const TowerElement& b);
  TowerElement& operator*=(const TowerElement& b);

  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(TowerElement a);
  friend bool operator==(const TowerElement& a, const TowerElement& b);

  // Sum of rational multiples of basis monomials, e.g. "2 - 1/15*r".
  std::string to_string() const;

 private:
  void check_same_tower(const TowerElement& b) const;

  TowerPtr tower_;
  DenseCoeffs coeffs_;
};

TowerElement inverse(const TowerElement& a);

inline TowerElement operator/(const TowerElement& a, const TowerElement& b) {
  return a * inverse(b);
}

// Field context used by the polynomial templates.
class TowerField {
 public:
  using Element = TowerElement;

  TowerField() : tower_(FieldTower::rationals()) {}
  explicit TowerField(TowerPtr tower) : tower_(std::move(tower)) {}

  const TowerPtr& tower() const { return tower_; }

  Element zero() const { return Element(tower_, Rational(0)); }
  Element one() const { return Element(tower_, Rational(1)); }
  Element from_int(long v) const { return Element(tower_, Rational(v)); }
  Element from_rational(const Rational& q) const { return Element(tower_, q); }
  Element generator(std::size_t i) const { return Element(tower_, tower_->generator(i)); }

  unsigned long characteristic() const { return 0; }
  std::string describe() const;

  friend bool operator==(const TowerField& a, const TowerField& b) {
    return a.tower_->same_as(*b.tower_);
  }

 private:
  TowerPtr tower_;
};

}  // namespace canmap

#include "canmap/arith/tower_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace canmap {

TowerElement::TowerElement(TowerPtr tower, DenseCoeffs coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != tower_->degree()) {
    throw std::invalid_argument("coefficient vector length does not match the tower degree");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

TowerElement::TowerElement(TowerPtr tower, const Rational& q) : tower_(std::move(tower)) {
  coeffs_.resize(tower_->degree());
  coeffs_[0] = q;
  coeffs_[0].canonicalize();
}

bool TowerElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool TowerElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool TowerElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

void TowerElement::check_same_tower(const TowerElement& b) const {
  if (tower_ != b.tower_ && !tower_->same_as(*b.tower_)) {
    throw std::invalid_argument("operands belong to different field towers");
  }
}

TowerElement& TowerElement::operator+=(const TowerElement& b) {
  check_same_tower(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(b.coeffs_[i]) != 0) coeffs_[i] += b.coeffs_[i];
  }
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& b) {
  check_same_tower(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(b.coeffs_[i]) != 0) coeffs_[i] -= b.coeffs_[i];
  }
  return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& b) {
  *this = *this * b;
  return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  a.check_same_tower(b);
  if (a.coeffs_.size() == 1) return TowerElement(a.tower_, DenseCoeffs{a.coeffs_[0] * b.coeffs_[0]});
  if (b.is_rational()) {
    DenseCoeffs c = a.coeffs_;
    const Rational& s = b.coeffs_[0];
    for (Rational& q : c) {
      if (sgn(q) != 0) q *= s;
    }
    return TowerElement(a.tower_, std::move(c));
  }
  if (a.is_rational()) return b * a;
  return TowerElement(a.tower_, a.tower_->multiply(a.coeffs_, b.coeffs_));
}

TowerElement operator-(TowerElement a) {
  for (Rational& q : a.coeffs_) q = -q;
  return a;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  a.check_same_tower(b);
  return a.coeffs_ == b.coeffs_;
}

TowerElement inverse(const TowerElement& a) {
  if (a.is_rational()) {
    if (sgn(a.coeffs()[0]) == 0) throw std::domain_error("division by zero");
    return TowerElement(a.tower(), Rational(1 / a.coeffs()[0]));
  }
  return TowerElement(a.tower(), a.tower()->inverse(a.coeffs()));
}

std::string TowerElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& q = coeffs_[i];
    if (sgn(q) == 0) continue;
    std::string basis = i == 0 ? std::string() : tower_->basis_name(i);
    std::string mag = canmap::to_string(abs(q));
    std::string term;
    if (basis.empty()) {
      term = mag;
    } else if (mag == "1") {
      term = basis;
    } else {
      term = mag + "*" + basis;
    }
    if (out.empty()) {
      out = sgn(q) < 0 ? "-" + term : term;
    } else {
      out += sgn(q) < 0 ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string TowerField::describe() const {
  if (tower_->num_steps() == 0) return "Q";
  std::string out = "Q(";
  for (std::size_t i = 0; i < tower_->num_steps(); ++i) {
    if (i) out += ",";
    out += tower_->step(i).name;
  }
  return out + ")";
}

}  // namespace canmap

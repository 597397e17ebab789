#include "canmap/arith/field_tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace canmap {
namespace {

bool is_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) == 0; });
}

void add_into(DenseCoeffs& acc, std::span<const Rational> b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(b[i]) != 0) acc[i] += b[i];
  }
}

void sub_into(DenseCoeffs& acc, std::span<const Rational> b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(b[i]) != 0) acc[i] -= b[i];
  }
}

// Univariate polynomials over a tower level, coefficient lists low to high.
using LevelPoly = std::vector<DenseCoeffs>;

void trim(LevelPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

}  // namespace

FieldTower::FieldTower(std::vector<TowerStep> steps) : steps_(std::move(steps)) {
  strides_.push_back(1);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const TowerStep& s = steps_[i];
    if (s.degree() < 2) {
      throw std::invalid_argument("minimal polynomial of '" + s.name + "' must have degree >= 2");
    }
    for (const DenseCoeffs& c : s.minpoly) {
      if (c.size() != strides_.back()) {
        throw std::invalid_argument("coefficient of the minimal polynomial of '" + s.name +
                                    "' does not live in the tower below it");
      }
    }
    const DenseCoeffs& lead = s.minpoly.back();
    bool monic = sgn(lead[0] - 1) == 0;
    for (std::size_t k = 1; k < lead.size(); ++k) monic = monic && sgn(lead[k]) == 0;
    if (!monic) throw std::invalid_argument("minimal polynomial of '" + s.name + "' is not monic");
    for (std::size_t j = 0; j < i; ++j) {
      if (steps_[j].name == s.name) {
        throw std::invalid_argument("duplicate generator name '" + s.name + "'");
      }
    }
    strides_.push_back(strides_.back() * s.degree());
  }
}

TowerPtr FieldTower::rationals() {
  static const TowerPtr q(new FieldTower({}));
  return q;
}

TowerPtr FieldTower::create(std::vector<TowerStep> steps) {
  return TowerPtr(new FieldTower(std::move(steps)));
}

std::optional<std::size_t> FieldTower::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].name == name) return i;
  }
  return std::nullopt;
}

TowerPtr FieldTower::prefix(std::size_t level) const {
  if (level > steps_.size()) throw std::out_of_range("tower prefix level");
  if (level == 0) return rationals();
  return create(std::vector<TowerStep>(steps_.begin(), steps_.begin() + level));
}

bool FieldTower::same_as(const FieldTower& other) const {
  if (this == &other) return true;
  if (steps_.size() != other.steps_.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].name != other.steps_[i].name || steps_[i].minpoly != other.steps_[i].minpoly) {
      return false;
    }
  }
  return true;
}

DenseCoeffs FieldTower::generator(std::size_t i) const {
  DenseCoeffs c(degree());
  c.at(strides_.at(i)) = 1;
  return c;
}

std::size_t FieldTower::basis_exponent(std::size_t index, std::size_t step) const {
  return (index / strides_.at(step)) % steps_.at(step).degree();
}

std::string FieldTower::basis_name(std::size_t index) const {
  std::string out;
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    std::size_t e = basis_exponent(index, s);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += steps_[s].name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

DenseCoeffs FieldTower::multiply_at(std::size_t level, std::span<const Rational> a,
                                    std::span<const Rational> b) const {
  if (level == 0) return {a[0] * b[0]};
  const std::size_t s = strides_[level - 1];
  const TowerStep& step = steps_[level - 1];
  const std::size_t d = step.degree();
  std::vector<DenseCoeffs> prod(2 * d - 1, DenseCoeffs(s));
  std::vector<bool> a_nz(d), b_nz(d);
  for (std::size_t i = 0; i < d; ++i) {
    a_nz[i] = !is_zero(a.subspan(i * s, s));
    b_nz[i] = !is_zero(b.subspan(i * s, s));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!a_nz[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b_nz[j]) continue;
      if (s == 1) {
        prod[i + j][0] += a[i] * b[j];
      } else {
        add_into(prod[i + j], multiply_at(level - 1, a.subspan(i * s, s), b.subspan(j * s, s)));
      }
    }
  }
  // X^d = -(c_0 + c_1 X + ... + c_{d-1} X^{d-1})
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    if (is_zero(prod[k])) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(step.minpoly[i])) continue;
      sub_into(prod[k - d + i], multiply_at(level - 1, prod[k], step.minpoly[i]));
    }
  }
  DenseCoeffs out;
  out.reserve(s * d);
  for (std::size_t i = 0; i < d; ++i) {
    out.insert(out.end(), prod[i].begin(), prod[i].end());
  }
  return out;
}

DenseCoeffs FieldTower::inverse_at(std::size_t level, std::span<const Rational> a) const {
  if (level == 0) {
    if (sgn(a[0]) == 0) throw std::domain_error("division by zero");
    return {1 / a[0]};
  }
  const std::size_t s = strides_[level - 1];
  const TowerStep& step = steps_[level - 1];
  const std::size_t d = step.degree();

  auto mul = [&](const DenseCoeffs& x, const DenseCoeffs& y) { return multiply_at(level - 1, x, y); };
  auto inv = [&](const DenseCoeffs& x) { return inverse_at(level - 1, x); };

  auto poly_mul = [&](const LevelPoly& x, const LevelPoly& y) {
    if (x.empty() || y.empty()) return LevelPoly{};
    LevelPoly out(x.size() + y.size() - 1, DenseCoeffs(s));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (!is_zero(y[j])) add_into(out[i + j], mul(x[i], y[j]));
      }
    }
    trim(out);
    return out;
  };
  auto poly_sub = [&](LevelPoly x, const LevelPoly& y) {
    if (x.size() < y.size()) x.resize(y.size(), DenseCoeffs(s));
    for (std::size_t i = 0; i < y.size(); ++i) sub_into(x[i], y[i]);
    trim(x);
    return x;
  };

  LevelPoly r0(step.minpoly.begin(), step.minpoly.end());
  LevelPoly r1;
  for (std::size_t i = 0; i < d; ++i) r1.emplace_back(a.begin() + i * s, a.begin() + (i + 1) * s);
  trim(r1);
  if (r1.empty()) throw std::domain_error("division by zero");
  LevelPoly s0;
  LevelPoly s1{DenseCoeffs(s)};
  s1[0][0] = 1;

  while (r1.size() > 1) {
    // r0 = q * r1 + rem
    LevelPoly rem = r0;
    LevelPoly q(rem.size() - r1.size() + 1, DenseCoeffs(s));
    const DenseCoeffs lead_inv = inv(r1.back());
    while (rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      DenseCoeffs factor = mul(rem.back(), lead_inv);
      q[shift] = factor;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        sub_into(rem[i + shift], mul(factor, r1[i]));
      }
      rem.pop_back();
      trim(rem);
      if (rem.empty()) break;
    }
    trim(q);
    if (rem.empty()) {
      throw std::domain_error("element is a zero divisor: minimal polynomial of '" + step.name +
                              "' is reducible");
    }
    LevelPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const DenseCoeffs c_inv = inv(r1[0]);
  DenseCoeffs out(s * d);
  for (std::size_t i = 0; i < s1.size() && i < d; ++i) {
    DenseCoeffs c = mul(s1[i], c_inv);
    std::copy(c.begin(), c.end(), out.begin() + i * s);
  }
  return out;
}

}  // namespace canmap

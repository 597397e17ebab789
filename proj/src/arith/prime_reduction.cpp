#include "canmap/arith/prime_reduction.hpp"

#include <limits>
#include <string>

namespace canmap {
namespace {

std::uint32_t reduce_dense(const DenseCoeffs& c, const std::vector<std::uint32_t>& basis, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    acc = (acc + std::uint64_t{rational_mod(c[i], p)} * basis[i]) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

PrimeReduction PrimeReduction::create(TowerPtr tower, std::uint32_t p) {
  PrimeReduction red(std::move(tower), p);
  red.build(nullptr);
  return red;
}

PrimeReduction PrimeReduction::create(TowerPtr tower, std::uint32_t p,
                                      std::vector<std::uint32_t> images) {
  PrimeReduction red(std::move(tower), p);
  red.build(&images);
  return red;
}

void PrimeReduction::build(const std::vector<std::uint32_t>* forced) {
  const std::string where = "prime " + std::to_string(p_);
  if (p_ < 3 || !modp::is_prime(p_)) throw InvalidReduction(where + " is not an odd prime");
  if (forced && forced->size() != tower_->num_steps()) {
    throw InvalidReduction("expected one image per tower generator");
  }
  basis_images_ = {1};
  for (std::size_t k = 0; k < tower_->num_steps(); ++k) {
    const TowerStep& step = tower_->step(k);
    modp::UPoly f;
    for (const DenseCoeffs& c : step.minpoly) {
      try {
        f.push_back(reduce_dense(c, basis_images_, p_));
      } catch (const std::domain_error&) {
        throw InvalidReduction(where + " divides a denominator in the minimal polynomial of '" +
                               step.name + "'");
      }
    }
    if (!modp::is_squarefree(f, p_)) {
      throw InvalidReduction("minimal polynomial of '" + step.name + "' is not squarefree modulo " +
                             std::to_string(p_));
    }
    std::uint32_t image;
    if (forced) {
      image = (*forced)[k] % p_;
      std::uint64_t value = 0;
      for (std::size_t i = f.size(); i-- > 0;) value = (value * image + f[i]) % p_;
      if (value != 0) {
        throw InvalidReduction("image of '" + step.name + "' is not a root modulo " + std::to_string(p_));
      }
    } else {
      auto rs = modp::roots(f, p_);
      if (rs.empty()) {
        throw InvalidReduction("minimal polynomial of '" + step.name + "' has no root modulo " +
                               std::to_string(p_));
      }
      image = static_cast<std::uint32_t>(rs.front());
    }
    images_.push_back(image);
    const std::size_t d = step.degree();
    std::vector<std::uint32_t> next(basis_images_.size() * d);
    std::uint64_t power = 1;
    for (std::size_t e = 0; e < d; ++e) {
      for (std::size_t i = 0; i < basis_images_.size(); ++i) {
        next[e * basis_images_.size() + i] = static_cast<std::uint32_t>(basis_images_[i] * power % p_);
      }
      power = power * image % p_;
    }
    basis_images_ = std::move(next);
  }
}

std::vector<PrimeReduction> PrimeReduction::select(TowerPtr tower, std::uint32_t floor, std::size_t count) {
  std::vector<PrimeReduction> out;
  for (std::uint64_t p = std::max<std::uint32_t>(floor, 3); out.size() < count; ++p) {
    if (p > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidReduction("no valid prime below 2^32");
    }
    if (!modp::is_prime(p)) continue;
    try {
      out.push_back(create(tower, static_cast<std::uint32_t>(p)));
    } catch (const InvalidReduction&) {
    }
  }
  return out;
}

Fp PrimeReduction::reduce(const TowerElement& a) const {
  if (!a.tower()->same_as(*tower_)) throw std::invalid_argument("element from a different tower");
  return Fp(reduce_dense(a.coeffs(), basis_images_, p_), p_);
}

}  // namespace canmap

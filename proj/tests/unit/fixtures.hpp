#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "canmap/arith/prime_field.hpp"
#include "canmap/arith/tower_element.hpp"
#include "canmap/pipeline/scenario.hpp"
#include "canmap/poly/parser.hpp"

namespace canmap::testing {

constexpr std::uint32_t kSeed = 20240601;

inline TowerPtr tower_r() {
  static const TowerPtr t = tower_from_text({{"r", "x", "x^2+15"}});
  return t;
}

inline TowerPtr tower_rmn() {
  static const TowerPtr t = tower_from_text({{"r", "x", "x^2 + 15"},
                                             {"m", "x", "x^2 - 95/42*x + 2855/2646"},
                                             {"n", "n", "n^2 + 443889677/206391214080000*r - 46942774543/619173642240000"}});
  return t;
}

inline RingPtr<TowerField> ring_p4() {
  static const RingPtr<TowerField> r = PolyRing<TowerField>::make(TowerField(tower_r()), {"x", "y", "z", "w", "t"});
  return r;
}

inline const char* kQ = "5*(x^2+y^2+z^2+w^2+t^2)-7*(x+y+z+w+t)^2";
inline const char* kI =
    "4*(x^4+y^4+z^4+w^4+t^4+(x+y+z+w+t)^4)-(x^2+y^2+z^2+w^2+t^2+(x+y+z+w+t)^2)^2";

inline Poly<TowerField> poly_p4(const std::string& text) { return parse_poly<TowerField>(text, ring_p4()); }

inline RationalPoint<TowerField> point_p4(const std::vector<std::string>& coords) {
  std::vector<TowerElement> v;
  for (const auto& c : coords) v.push_back(parse_tower_element(c, tower_r()));
  return RationalPoint<TowerField>(std::move(v));
}

inline const pipeline::X40Data& x40_data() {
  static const pipeline::X40Data d = pipeline::load_x40(pipeline::load_source(pipeline::default_data_dir(), "x40"));
  return d;
}

inline const pipeline::Y48Data& y48_data() {
  static const pipeline::Y48Data d = pipeline::load_y48(pipeline::load_source(pipeline::default_data_dir(), "y48"));
  return d;
}

inline Rational random_rational(std::mt19937& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline TowerElement random_element(std::mt19937& rng, const TowerPtr& tower, int bound = 9) {
  DenseCoeffs c(tower->degree());
  for (auto& x : c) x = random_rational(rng, bound);
  return TowerElement(tower, std::move(c));
}

// Random polynomial with small integer coefficients and bounded total degree.
template <class K>
Poly<K> random_poly(std::mt19937& rng, const RingPtr<K>& ring, unsigned max_degree, std::size_t terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  Poly<K> f(ring);
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m;
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) m = m * Monomial::variable(var(rng));
    f += Poly<K>::monomial(ring, m, ring->field().from_int(coeff(rng)));
  }
  return f;
}

}  // namespace canmap::testing

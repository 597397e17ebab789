#include "canmap/poly/parser.hpp"

namespace canmap {

TowerElement parse_tower_element(std::string_view text, const TowerPtr& tower) {
  ExpressionAlgebra<TowerElement> alg;
  alg.constant = [&](const Rational& q) { return TowerElement(tower, q); };
  alg.identifier = [&](std::string_view name) -> std::optional<TowerElement> {
    if (auto i = tower->generator_index(name)) return TowerElement(tower, tower->generator(*i));
    return std::nullopt;
  };
  return ExpressionParser<TowerElement>(text, alg).parse();
}

TowerPtr tower_from_text(const std::vector<TowerStepText>& steps) {
  std::vector<TowerStep> built;
  for (const TowerStepText& st : steps) {
    TowerPtr lower = built.empty() ? FieldTower::rationals() : FieldTower::create(built);
    const std::string var = st.variable.empty() ? st.name : st.variable;
    if (lower->generator_index(st.name)) {
      throw std::invalid_argument("duplicate generator name '" + st.name + "'");
    }
    auto ring = PolyRing<TowerField>::make(TowerField(lower), {var});
    Poly<TowerField> f(ring);
    try {
      f = parse_poly(st.minpoly, ring);
    } catch (const ParseError& e) {
      throw std::invalid_argument("minimal polynomial of '" + st.name + "': " + e.what());
    }
    if (f.is_zero()) throw std::invalid_argument("minimal polynomial of '" + st.name + "' is zero");
    const unsigned d = f.total_degree();
    if (d < 2) {
      throw std::invalid_argument("minimal polynomial of '" + st.name + "' must have degree >= 2");
    }
    if (!f.leading_coeff().is_one()) {
      throw std::invalid_argument("minimal polynomial of '" + st.name + "' is not monic");
    }
    TowerStep step{st.name, std::vector<DenseCoeffs>(d + 1, DenseCoeffs(lower->degree()))};
    for (const auto& t : f.terms()) step.minpoly[t.mono.exps[0]] = t.coeff.coeffs();
    built.push_back(std::move(step));
  }
  return FieldTower::create(std::move(built));
}

}  // namespace canmap

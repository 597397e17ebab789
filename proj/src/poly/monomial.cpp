#include "canmap/poly/monomial.hpp"

#include "canmap/poly/monomial_order.hpp"

namespace canmap {

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // Odometer over compositions of d into n parts.
  auto recurse = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == n) {
      m.exps[var] = static_cast<Monomial::Exponent>(remaining);
      m.degree = d;
      out.push_back(m);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      m.exps[var] = static_cast<Monomial::Exponent>(e);
      self(self, var + 1, remaining - e);
    }
    m.exps[var] = 0;
  };
  recurse(recurse, 0, d);
  return out;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::kDegRevLex:
      return "degrevlex";
    case Kind::kLex:
      return "lex";
    case Kind::kBlock:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace canmap

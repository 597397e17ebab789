#include "canmap/groebner/hilbert.hpp"

#include <algorithm>

namespace canmap {
namespace {

using IntPoly = std::vector<Integer>;

void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

IntPoly mul_one_minus_power(const IntPoly& p, std::size_t e) {
  IntPoly out(p.size() + e);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + e] -= p[i];
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

IntPoly numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree == 0) return {};  // unit ideal
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
    }
  }
  if (pairwise_coprime) {
    IntPoly p{1};
    for (const Monomial& g : gens) p = mul_one_minus_power(p, g.degree);
    return p;
  }
  // Pivot on the variable occurring in the most generators, at its smallest
  // positive exponent: N(I) = N(I + x^e) + t^e N(I : x^e).
  std::size_t best = 0, best_count = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t count = 0;
    for (const Monomial& g : gens) count += g.exps[v] > 0;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  unsigned e = ~0u;
  for (const Monomial& g : gens) {
    if (g.exps[best] > 0) e = std::min<unsigned>(e, g.exps[best]);
  }
  const Monomial pivot = Monomial::variable(best, e);

  std::vector<Monomial> sum;
  for (const Monomial& g : gens) {
    if (!pivot.divides(g)) sum.push_back(g);
  }
  sum.push_back(pivot);

  std::vector<Monomial> colon;
  for (const Monomial& g : gens) {
    Monomial q = g;
    const unsigned drop = std::min<unsigned>(q.exps[best], e);
    q.exps[best] -= drop;
    q.degree -= drop;
    colon.push_back(q);
  }

  IntPoly out = numerator(std::move(sum), nvars);
  add_shifted(out, numerator(std::move(colon), nvars), e);
  return out;
}

}  // namespace

HilbertData hilbert_series(std::vector<Monomial> monomials, std::size_t nvars) {
  HilbertData h;
  h.numerator = numerator(std::move(monomials), nvars);
  while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();
  if (h.numerator.empty()) {
    h.krull_dim = -1;
    h.multiplicity = 0;
    return h;
  }
  IntPoly p = h.numerator;
  std::size_t k = 0;
  auto value_at_one = [](const IntPoly& q) {
    Integer s = 0;
    for (const auto& c : q) s += c;
    return s;
  };
  while (value_at_one(p) == 0) {
    // Divide by (1 - t): q_i = sum_{j <= i} p_j.
    IntPoly q(p.size() - 1);
    Integer run = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      run += p[i];
      q[i] = run;
    }
    p = std::move(q);
    ++k;
  }
  h.krull_dim = static_cast<int>(nvars) - static_cast<int>(k);
  h.multiplicity = value_at_one(p);
  return h;
}

}  // namespace canmap

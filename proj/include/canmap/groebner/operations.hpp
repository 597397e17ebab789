#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "canmap/arith/matrix.hpp"
#include "canmap/groebner/hilbert.hpp"
#include "canmap/groebner/ideal.hpp"

namespace canmap {

struct DimDegree {
  int dimension;  // projective dimension, -1 for the empty scheme
  Integer degree;

  friend bool operator==(const DimDegree& a, const DimDegree& b) {
    return a.dimension == b.dimension && a.degree == b.degree;
  }
};

template <class K>
HilbertData hilbert_data(const Ideal<K>& ideal) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("Hilbert series needs a homogeneous ideal");
  return hilbert_series(ideal.groebner().leading_monomials(), ideal.ring()->nvars());
}

// Projective dimension and degree of V(I), read off the Hilbert series of
// the leading-term ideal.
template <class K>
DimDegree hilbert_dim_degree(const Ideal<K>& ideal) {
  HilbertData h = hilbert_data(ideal);
  return {h.projective_dim(), h.projective_degree()};
}

namespace detail {

// Polynomials of `ring` moved into `target` with variable i sent to map[i].
template <class K>
std::vector<Poly<K>> remap_all(const std::vector<Poly<K>>& fs, const RingPtr<K>& target,
                               const std::vector<std::size_t>& map) {
  std::vector<Poly<K>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.remap(target, map));
  return out;
}

// Ring with an auxiliary first variable and the block order eliminating it.
template <class K>
RingPtr<K> with_aux_variable(const RingPtr<K>& ring) {
  if (ring->nvars() + 1 > kMaxVariables) {
    throw std::invalid_argument("no room for an auxiliary elimination variable");
  }
  std::vector<std::string> vars{"_aux"};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return ring->with_variables(std::move(vars), MonomialOrder::block(1));
}

template <class K>
std::vector<std::size_t> shift_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 1);
  return m;
}

// Eliminates the auxiliary variable 0 of `aux_ring` and maps back to `ring`.
template <class K>
Ideal<K> eliminate_aux(const std::vector<Poly<K>>& gens, const RingPtr<K>& ring) {
  auto gb = detail::interreduce(detail::buchberger(gens));
  std::vector<std::size_t> back(ring->nvars() + 1);
  for (std::size_t i = 1; i < back.size(); ++i) back[i] = i - 1;
  std::vector<Poly<K>> kept;
  for (const auto& g : gb) {
    if (!g.involves(0)) kept.push_back(g.remap(ring, back));
  }
  return Ideal<K>(ring, std::move(kept));
}

// Exact division; throws if g does not divide f.
template <class K>
Poly<K> divide_exact(const Poly<K>& f, const Poly<K>& g) {
  Poly<K> q(f.ring());
  Poly<K> r = f;
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial())) {
      throw std::logic_error("divide_exact: division is not exact");
    }
    const Monomial m = quotient(r.leading_monomial(), g.leading_monomial());
    const auto c = r.leading_coeff() / g.leading_coeff();
    q += Poly<K>::monomial(f.ring(), m, c);
    r.sub_mul(c, m, g);
  }
  return q;
}

}  // namespace detail

// I intersected with the subring on the variables not in `drop`.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& drop) {
  const RingPtr<K>& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::set<std::size_t> dropped(drop.begin(), drop.end());
  if (dropped.size() >= n) throw std::invalid_argument("eliminate: cannot drop every variable");
  // Dropped variables first, then the kept ones, each in original order.
  std::vector<std::size_t> perm;
  for (std::size_t v : dropped) {
    if (v >= n) throw std::out_of_range("eliminate: variable index");
    perm.push_back(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!dropped.count(v)) perm.push_back(v);
  }
  std::vector<std::size_t> to_new(n), to_old(n);
  std::vector<std::string> names(n);
  for (std::size_t k = 0; k < n; ++k) {
    to_new[perm[k]] = k;
    to_old[k] = perm[k];
    names[k] = ring->variables()[perm[k]];
  }
  auto elim_ring = ring->with_variables(names, MonomialOrder::block(dropped.size()));
  auto gb = detail::interreduce(detail::buchberger(detail::remap_all(ideal.generators(), elim_ring, to_new)));
  std::vector<Poly<K>> kept;
  for (const auto& g : gb) {
    bool pure = true;
    for (std::size_t k = 0; k < dropped.size(); ++k) pure = pure && !g.involves(k);
    if (pure) kept.push_back(g.remap(ring, to_old));
  }
  return Ideal<K>(ring, std::move(kept));
}

// I ∩ J via elimination of t from t*I + (1 - t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  const RingPtr<K>& ring = a.ring();
  if (!ring->same_as(*b.ring())) throw std::invalid_argument("intersect: different rings");
  if (a.is_zero() || b.is_zero()) return Ideal<K>(ring);
  auto aux = detail::with_aux_variable(ring);
  const auto shift = detail::shift_map<K>(ring->nvars());
  const Poly<K> t = Poly<K>::variable(aux, 0);
  const Poly<K> one_minus_t = Poly<K>::constant(aux, 1) - t;
  std::vector<Poly<K>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.remap(aux, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(aux, shift));
  return detail::eliminate_aux(gens, ring);
}

// I : f
template <class K>
Ideal<K> quotient_by(const Ideal<K>& ideal, const Poly<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal quotient by zero");
  if (contains(ideal.groebner(), f)) {
    return Ideal<K>(ideal.ring(), {Poly<K>::constant(ideal.ring(), 1)});
  }
  Ideal<K> meet = intersect(ideal, Ideal<K>(ideal.ring(), {f}));
  std::vector<Poly<K>> gens;
  for (const auto& g : meet.generators()) gens.push_back(detail::divide_exact(g, f));
  return Ideal<K>(ideal.ring(), std::move(gens));
}

// I : J = ∩_g (I : g) over generators g of J.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Ideal<K>& by) {
  if (by.is_zero()) throw std::invalid_argument("ideal quotient by the zero ideal");
  std::optional<Ideal<K>> acc;
  for (const auto& g : by.generators()) {
    if (contains(ideal.groebner(), g)) continue;
    Ideal<K> q = quotient_by(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return Ideal<K>(ideal.ring(), {Poly<K>::constant(ideal.ring(), 1)});
  return *acc;
}

// I : f^∞. Homogeneous I and a variable f use one revlex basis with f last;
// otherwise t*f - 1 is adjoined and t eliminated.
template <class K>
Ideal<K> saturate_by(const Ideal<K>& ideal, const Poly<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  const RingPtr<K>& ring = ideal.ring();
  if (f.is_constant()) return ideal;
  const bool is_variable = f.size() == 1 && f.leading_monomial().degree == 1;
  if (is_variable && ideal.is_homogeneous()) {
    std::size_t v = 0;
    while (f.leading_monomial().exps[v] == 0) ++v;
    const std::size_t n = ring->nvars();
    std::vector<std::size_t> to_new(n), to_old(n);
    std::vector<std::string> names;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (i == v) continue;
      to_new[i] = k;
      to_old[k] = i;
      names.push_back(ring->variables()[i]);
      ++k;
    }
    to_new[v] = n - 1;
    to_old[n - 1] = v;
    names.push_back(ring->variables()[v]);
    auto perm_ring = ring->with_variables(names, MonomialOrder::degrevlex());
    auto gb = detail::interreduce(detail::buchberger(detail::remap_all(ideal.generators(), perm_ring, to_new)));
    std::vector<Poly<K>> out;
    for (const auto& g : gb) {
      unsigned low = ~0u;
      for (const auto& term : g.terms()) low = std::min<unsigned>(low, term.mono.exps[n - 1]);
      Poly<K> h = g;
      if (low > 0) h = detail::divide_exact(g, Poly<K>::monomial(perm_ring, Monomial::variable(n - 1, low),
                                                                  ring->field().one()));
      out.push_back(h.remap(ring, to_old));
    }
    return Ideal<K>(ring, std::move(out));
  }
  auto aux = detail::with_aux_variable(ring);
  const auto shift = detail::shift_map<K>(ring->nvars());
  std::vector<Poly<K>> gens = detail::remap_all(ideal.generators(), aux, shift);
  gens.push_back(Poly<K>::variable(aux, 0) * f.remap(aux, shift) - Poly<K>::constant(aux, 1));
  return detail::eliminate_aux(gens, ring);
}

// I : J^∞ = ∩_g (I : g^∞); returns I as soon as one factor equals I.
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Ideal<K>& by) {
  if (by.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  std::vector<Ideal<K>> parts;
  for (const auto& g : by.generators()) {
    Ideal<K> s = saturate_by(ideal, g);
    if (ideal_equal(s, ideal)) return ideal;
    parts.push_back(std::move(s));
  }
  Ideal<K> acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
  return acc;
}

template <class K>
Ideal<K> irrelevant_ideal(const RingPtr<K>& ring) {
  std::vector<Poly<K>> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Poly<K>::variable(ring, i));
  return Ideal<K>(ring, std::move(vars));
}

template <class K>
struct HomogeneousSlice {
  std::vector<Monomial> monomials;  // degree-d monomials, decreasing
  Matrix<K> basis;                  // coefficient rows over `monomials`
};

template <class K>
std::vector<Monomial> sorted_monomials(const RingPtr<K>& ring, unsigned d) {
  std::vector<Monomial> ms = monomials_of_degree(ring->nvars(), d);
  const MonomialOrder& ord = ring->order();
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return ms;
}

template <class K>
Vec<K> coefficient_vector(const Poly<K>& f, const std::vector<Monomial>& monomials) {
  Vec<K> v(monomials.size(), f.ring()->field().zero());
  for (const auto& t : f.terms()) {
    auto it = std::find(monomials.begin(), monomials.end(), t.mono);
    if (it == monomials.end()) throw std::invalid_argument("polynomial has a term outside the monomial list");
    v[static_cast<std::size_t>(it - monomials.begin())] = t.coeff;
  }
  return v;
}

template <class K>
Poly<K> from_coefficients(const RingPtr<K>& ring, const std::vector<Monomial>& monomials, const Vec<K>& v) {
  std::vector<typename Poly<K>::Term> terms;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (!v[i].is_zero()) terms.push_back({monomials[i], v[i]});
  }
  return Poly<K>::from_terms(ring, std::move(terms));
}

// Basis of I_d: m - NF(m) for every degree-d monomial m in the leading-term ideal.
template <class K>
HomogeneousSlice<K> homogeneous_part(const Ideal<K>& ideal, int d) {
  if (d < 0) throw std::invalid_argument("homogeneous_part: negative degree");
  if (!ideal.is_homogeneous()) throw std::invalid_argument("homogeneous_part needs a homogeneous ideal");
  const auto& gb = ideal.groebner();
  HomogeneousSlice<K> slice{sorted_monomials(ideal.ring(), static_cast<unsigned>(d)), {}};
  for (const Monomial& m : slice.monomials) {
    bool in_lt = std::any_of(gb.elements.begin(), gb.elements.end(),
                             [&](const Poly<K>& g) { return g.leading_monomial().divides(m); });
    if (!in_lt) continue;
    Poly<K> mono = Poly<K>::monomial(ideal.ring(), m, ideal.ring()->field().one());
    slice.basis.push_back(coefficient_vector(mono - normal_form(mono, gb), slice.monomials));
  }
  return slice;
}

}  // namespace canmap

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "canmap/arith/matrix.hpp"
#include "canmap/groebner/operations.hpp"
#include "canmap/poly/jacobian.hpp"

namespace canmap {

// Dense univariate polynomials over K, coefficients low to high, trimmed.
template <class K>
using UPoly = std::vector<typename K::Element>;

namespace upoly {

template <class K>
void trim(UPoly<K>& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <class K>
UPoly<K> rem(UPoly<K> a, const UPoly<K>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const auto inv = inverse(b.back());
  while (a.size() >= b.size()) {
    const auto c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim<K>(a);
  }
  return a;
}

template <class K>
UPoly<K> div_exact(UPoly<K> a, const UPoly<K>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) {
    if (!a.empty()) throw std::logic_error("upoly::div_exact: division is not exact");
    return a;
  }
  const auto inv = inverse(b.back());
  UPoly<K> q(a.size() - b.size() + 1, b.back() - b.back());
  while (a.size() >= b.size()) {
    const auto c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim<K>(a);
  }
  if (!a.empty()) throw std::logic_error("upoly::div_exact: division is not exact");
  return q;
}

template <class K>
UPoly<K> monic(UPoly<K> f) {
  if (f.empty()) return f;
  const auto inv = inverse(f.back());
  for (auto& c : f) c = c * inv;
  return f;
}

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  trim<K>(a);
  trim<K>(b);
  while (!b.empty()) {
    UPoly<K> r = rem<K>(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic<K>(std::move(a));
}

template <class K>
UPoly<K> derivative(const K& field, const UPoly<K>& f) {
  UPoly<K> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * field.from_int(static_cast<long>(i)));
  trim<K>(d);
  return d;
}

// f / gcd(f, f'); valid in characteristic 0 or above deg f.
template <class K>
UPoly<K> squarefree_part(const K& field, const UPoly<K>& f) {
  return monic<K>(div_exact<K>(f, gcd<K>(f, derivative(field, f))));
}

}  // namespace upoly

namespace detail {

template <class K>
typename K::Element random_element(const K& field, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-20, 20);
  long v = 0;
  while (v == 0) v = dist(rng);
  return field.from_int(v);
}

template <class K>
Poly<K> random_linear_form(const RingPtr<K>& ring, std::mt19937& rng) {
  Poly<K> f(ring);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    f += Poly<K>::variable(ring, i).scaled(random_element(ring->field(), rng));
  }
  return f;
}

// Random homogeneous combination of homogeneous polynomials, padded to a
// common degree by powers of random linear forms.
template <class K>
Poly<K> random_combination(const std::vector<Poly<K>>& fs, std::mt19937& rng) {
  unsigned top = 0;
  for (const auto& f : fs) top = std::max(top, *f.homogeneous_degree());
  Poly<K> acc(fs.front().ring());
  for (const auto& f : fs) {
    Poly<K> pad = random_linear_form(f.ring(), rng).pow(top - *f.homogeneous_degree());
    acc += (pad * f).scaled(random_element(f.ring()->field(), rng));
  }
  return acc;
}

// Standard monomials of a zero-dimensional affine Groebner basis, found by
// growing from 1 and stopping at leading-term multiples.
template <class K>
std::vector<Monomial> standard_monomials(const ReducedGB<K>& gb, const std::vector<std::size_t>& vars) {
  auto in_lt = [&](const Monomial& m) {
    for (const auto& g : gb.elements) {
      if (g.leading_monomial().divides(m)) return true;
    }
    return false;
  };
  std::vector<Monomial> out;
  std::unordered_map<Monomial, bool, MonomialHash> seen;
  std::vector<Monomial> frontier{Monomial{}};
  seen.emplace(Monomial{}, true);
  if (in_lt(Monomial{})) return out;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      out.push_back(m);
      for (std::size_t v : vars) {
        Monomial e = m * Monomial::variable(v, 1);
        if (seen.emplace(e, true).second && !in_lt(e)) next.push_back(e);
      }
    }
    frontier = std::move(next);
    if (out.size() > 100000) throw std::runtime_error("standard_monomials: ideal is not zero-dimensional");
  }
  return out;
}

// Radical of a zero-dimensional projective ideal: move a linear form
// avoiding all points to a coordinate, dehomogenize, adjoin squarefree parts
// of the minimal polynomials of the coordinates, homogenize back.
template <class K>
Ideal<K> radical_points(const Ideal<K>& ideal, std::mt19937& rng) {
  const RingPtr<K>& ring = ideal.ring();
  const K& field = ring->field();
  const std::size_t n = ring->nvars();
  const std::size_t k = n - 1;
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<typename K::Element> c(n, field.zero());
    Poly<K> ell = Poly<K>::variable(ring, k);
    if (attempt > 0) {
      for (std::size_t j = 0; j < k; ++j) {
        c[j] = random_element(field, rng);
        ell += Poly<K>::variable(ring, j).scaled(c[j]);
      }
    }
    if (hilbert_dim_degree(ideal.with({ell})).dimension != -1) continue;

    // x_k = y_k - sum c_j y_j, then y_k = 1.
    std::vector<Poly<K>> forward, affine;
    for (std::size_t j = 0; j < n; ++j) forward.push_back(Poly<K>::variable(ring, j));
    for (std::size_t j = 0; j < k; ++j) forward[k] -= Poly<K>::variable(ring, j).scaled(c[j]);
    for (std::size_t j = 0; j < n; ++j) affine.push_back(Poly<K>::variable(ring, j));
    affine[k] = Poly<K>::constant(ring, 1);
    std::vector<Poly<K>> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.substitute(forward).substitute(affine));
    Ideal<K> aff(ring, gens);
    const ReducedGB<K>& gb = aff.groebner();

    std::vector<std::size_t> vars(k);
    std::iota(vars.begin(), vars.end(), 0);
    std::vector<Monomial> basis = standard_monomials(gb, vars);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    auto vec_of = [&](const Poly<K>& f) {
      Vec<K> v(basis.size(), field.zero());
      for (const auto& t : f.terms()) v[index.at(t.mono)] = t.coeff;
      return v;
    };

    std::vector<Poly<K>> extra;
    for (std::size_t i : vars) {
      IncrementalSpan<K> span(field, basis.size());
      Poly<K> power = Poly<K>::constant(ring, 1);
      const Poly<K> xi = Poly<K>::variable(ring, i);
      std::optional<Vec<K>> dep;
      while (!(dep = span.add(vec_of(power)))) power = normal_form(power * xi, gb);
      UPoly<K> mu(dep->begin(), dep->end());
      UPoly<K> sq = upoly::squarefree_part(field, mu);
      if (sq.size() == mu.size()) continue;
      Poly<K> f(ring);
      for (std::size_t e = 0; e < sq.size(); ++e) {
        if (!sq[e].is_zero()) f += Poly<K>::monomial(ring, Monomial::variable(i, static_cast<unsigned>(e)), sq[e]);
      }
      extra.push_back(f);
    }
    const ReducedGB<K> rad = extra.empty() ? gb : aff.with(extra).groebner();
    std::vector<Poly<K>> back;
    for (std::size_t j = 0; j < n; ++j) back.push_back(Poly<K>::variable(ring, j));
    back[k] = ell;
    std::vector<Poly<K>> out;
    for (const auto& g : rad.elements) {
      const unsigned d = g.total_degree();
      Poly<K> h(ring);
      for (const auto& t : g.terms()) {
        h += Poly<K>::monomial(ring, t.mono * Monomial::variable(k, d - t.mono.degree), t.coeff);
      }
      out.push_back(h.substitute(back));
    }
    return Ideal<K>(ring, std::move(out));
  }
  throw std::runtime_error("radical: no linear form avoiding the points was found");
}

// Radical of an unmixed one-dimensional projective ideal: while the Jacobian
// criterion fails, replace I by I : g for a random element g of the
// Jacobian ideal.
template <class K>
Ideal<K> radical_curve(const Ideal<K>& ideal, std::mt19937& rng) {
  const std::size_t c = ideal.ring()->nvars() - 2;
  Ideal<K> cur = ideal;
  for (int round = 0; round < 12; ++round) {
    std::vector<Poly<K>> base = cur.generators();
    if (base.size() != c) {
      std::vector<Poly<K>> combos;
      for (std::size_t i = 0; i < c; ++i) combos.push_back(random_combination(base, rng));
      base = std::move(combos);
    }
    std::vector<Poly<K>> ms = minors(jacobian(base), c);
    std::erase_if(ms, [](const Poly<K>& m) { return m.is_zero(); });
    if (!ms.empty() && hilbert_dim_degree(cur.with(ms)).dimension < 1) return cur;
    if (ms.empty()) throw std::runtime_error("radical: vanishing Jacobian");
    Poly<K> g = random_combination(ms, rng);
    Ideal<K> next = quotient_by(cur, g);
    if (hilbert_dim_degree(next).dimension != 1) {
      throw std::runtime_error("radical: input is not unmixed of dimension 1");
    }
    cur = Ideal<K>::from_groebner(next.groebner());
  }
  throw std::runtime_error("radical: iteration did not converge");
}

}  // namespace detail

// Radical of a homogeneous ideal whose projective dimension is at most 1.
// One-dimensional input must be unmixed (e.g. a complete intersection).
template <class K>
Ideal<K> radical(const Ideal<K>& ideal, std::uint32_t seed = 20240601) {
  std::mt19937 rng(seed);
  switch (hilbert_dim_degree(ideal).dimension) {
    case -1:
      return Ideal<K>(ideal.ring(), {Poly<K>::constant(ideal.ring(), 1)});
    case 0:
      return detail::radical_points(ideal, rng);
    case 1:
      return detail::radical_curve(ideal, rng);
    default:
      throw std::invalid_argument("radical: only projective dimension <= 1 is supported");
  }
}

}  // namespace canmap

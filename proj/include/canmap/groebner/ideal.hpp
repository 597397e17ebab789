#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "canmap/poly/poly.hpp"

namespace canmap {

// Reduced Groebner basis in the order of `ring`: monic elements, no term of
// any element divisible by another element's leading monomial, sorted by
// increasing leading monomial.
template <class K>
struct ReducedGB {
  RingPtr<K> ring;
  std::vector<Poly<K>> elements;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
  bool is_zero() const { return elements.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const ReducedGB& a, const ReducedGB& b) {
    return a.ring->same_as(*b.ring) && a.elements == b.elements;
  }
};

namespace detail {

// Full reduction of f by the polynomials in g (monic, pairwise distinct
// leading monomials not required).
template <class K>
Poly<K> reduce_full(Poly<K> f, const std::vector<const Poly<K>*>& g) {
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Monomial m = f.terms()[pos].mono;
    const Poly<K>* divisor = nullptr;
    for (const Poly<K>* h : g) {
      if (h->leading_monomial().divides(m)) {
        divisor = h;
        break;
      }
    }
    if (!divisor) {
      ++pos;
      continue;
    }
    auto c = f.terms()[pos].coeff;
    if (!divisor->leading_coeff().is_one()) c = c / divisor->leading_coeff();
    f.sub_mul(c, quotient(m, divisor->leading_monomial()), *divisor, pos);
  }
  return f;
}

template <class K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Poly<K> a = f.mul_term(quotient(l, f.leading_monomial()), inverse(f.leading_coeff()));
  a.sub_mul(inverse(g.leading_coeff()), quotient(l, g.leading_monomial()), g);
  return a;
}

// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
// normal selection strategy (smallest lcm degree, then smallest lcm).
template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& input) {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Poly<K>> basis;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  if (input.empty()) return basis;
  const RingPtr<K> ring = input.front().ring();
  const MonomialOrder& ord = ring->order();

  auto active_ptrs = [&]() {
    std::vector<const Poly<K>*> out;
    out.reserve(active.size());
    for (std::size_t k : active) out.push_back(&basis[k]);
    return out;
  };

  auto update = [&](std::size_t h) {
    const Monomial lh = basis[h].leading_monomial();
    std::vector<std::size_t> cands = active;
    std::vector<std::size_t> kept;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      const std::size_t g1 = cands[idx];
      const Monomial l1 = lcm(lh, basis[g1].leading_monomial());
      bool keep = coprime(lh, basis[g1].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t k = idx + 1; k < cands.size() && keep; ++k) {
          if (lcm(lh, basis[cands[k]].leading_monomial()).divides(l1)) keep = false;
        }
        for (std::size_t g2 : kept) {
          if (!keep) break;
          if (lcm(lh, basis[g2].leading_monomial()).divides(l1)) keep = false;
        }
      }
      if (keep) kept.push_back(g1);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (Pair& p : pairs) {
      if (lh.divides(p.lcm) && !(lcm(basis[p.i].leading_monomial(), lh) == p.lcm) &&
          !(lcm(basis[p.j].leading_monomial(), lh) == p.lcm)) {
        continue;
      }
      next.push_back(std::move(p));
    }
    for (std::size_t g : kept) {
      if (!coprime(lh, basis[g].leading_monomial())) {
        next.push_back({g, h, lcm(lh, basis[g].leading_monomial())});
      }
    }
    pairs = std::move(next);
    std::erase_if(active, [&](std::size_t g) { return lh.divides(basis[g].leading_monomial()); });
    active.push_back(h);
  };

  auto insert = [&](Poly<K> f) -> bool {
    f = reduce_full(std::move(f), active_ptrs());
    if (f.is_zero()) return false;
    f = f.monic();
    basis.push_back(std::move(f));
    if (basis.back().is_constant()) return true;
    update(basis.size() - 1);
    return false;
  };

  for (const Poly<K>& f : input) {
    if (f.is_zero()) continue;
    if (insert(f)) return {basis.back()};
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Monomial& a = pairs[k].lcm;
      const Monomial& b = pairs[best].lcm;
      if (a.degree < b.degree || (a.degree == b.degree && ord.compare(a, b) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (insert(spoly(basis[p.i], basis[p.j]))) return {basis.back()};
  }
  std::vector<Poly<K>> out;
  for (std::size_t k : active) out.push_back(basis[k]);
  return out;
}

// Tail-reduces a minimal basis and sorts it.
template <class K>
std::vector<Poly<K>> interreduce(std::vector<Poly<K>> g) {
  const MonomialOrder ord = g.empty() ? MonomialOrder::degrevlex() : g.front().ring()->order();
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Poly<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[i].leading_monomial();
      const Monomial& b = g[j].leading_monomial();
      if (b.divides(a) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Poly<K>*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(&minimal[j]);
    }
    Poly<K> head = Poly<K>::monomial(minimal[i].ring(), minimal[i].leading_monomial(),
                                     minimal[i].leading_coeff());
    Poly<K> tail = reduce_full(minimal[i] - head, others);
    minimal[i] = head + tail;
  }
  return minimal;
}

}  // namespace detail

template <class K>
class Ideal {
 public:
  explicit Ideal(RingPtr<K> ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(RingPtr<K> ring, std::vector<Poly<K>> gens) : Ideal(std::move(ring)) {
    for (auto& g : gens) {
      if (!g.ring()->same_as(*ring_)) throw std::invalid_argument("ideal generator from another ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  static Ideal from_groebner(ReducedGB<K> gb) {
    Ideal i(gb.ring, gb.elements);
    std::lock_guard lock(i.cache_->mu);
    i.cache_->gb = std::move(gb);
    return i;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Poly<K>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Poly<K>& g) { return g.is_homogeneous(); });
  }

  // Reduced Groebner basis in the ring's order; computed once and shared by copies.
  const ReducedGB<K>& groebner() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->gb) {
      cache_->gb = ReducedGB<K>{ring_, detail::interreduce(detail::buchberger(gens_))};
    }
    return *cache_->gb;
  }

  Ideal operator+(const Ideal& other) const {
    std::vector<Poly<K>> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(g));
  }
  Ideal with(const std::vector<Poly<K>>& extra) const {
    std::vector<Poly<K>> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(g));
  }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<ReducedGB<K>> gb;
  };

  RingPtr<K> ring_;
  std::vector<Poly<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
ReducedGB<K> groebner_basis(const Ideal<K>& ideal) {
  return ideal.groebner();
}

// GB with respect to another order; the result lives in the re-ordered ring.
template <class K>
ReducedGB<K> groebner_basis(const Ideal<K>& ideal, const MonomialOrder& order) {
  if (ideal.ring()->order() == order) return ideal.groebner();
  RingPtr<K> target = ideal.ring()->with_order(order);
  std::vector<Poly<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.reordered(target));
  return ReducedGB<K>{target, detail::interreduce(detail::buchberger(gens))};
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const ReducedGB<K>& g) {
  if (!f.ring()->same_as(*g.ring)) {
    throw std::invalid_argument("normal_form: polynomial ring or order differs from the basis");
  }
  std::vector<const Poly<K>*> ptrs;
  for (const auto& e : g.elements) ptrs.push_back(&e);
  return detail::reduce_full(f, ptrs);
}

template <class K>
bool contains(const ReducedGB<K>& g, const Poly<K>& f) {
  return normal_form(f, g).is_zero();
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  return a.groebner() == b.groebner();
}

template <class K>
bool ideal_contains(const Ideal<K>& big, const Ideal<K>& small) {
  const auto& g = big.groebner();
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Poly<K>& f) { return contains(g, f); });
}

}  // namespace canmap

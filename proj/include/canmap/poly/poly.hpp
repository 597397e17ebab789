#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canmap/poly/monomial.hpp"
#include "canmap/poly/poly_ring.hpp"

namespace canmap {

// Sparse polynomial; terms are kept strictly decreasing in the ring's order
// and never carry a zero coefficient.
template <class K>
class Poly {
 public:
  using Element = typename K::Element;

  struct Term {
    Monomial mono;
    Element coeff;
  };

  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr<K> ring, Element c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  static Poly constant(RingPtr<K> ring, long c) {
    Element e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Poly variable(RingPtr<K> ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index");
    Poly p(ring);
    p.terms_.push_back({Monomial::variable(i), ring->field().one()});
    return p;
  }
  static Poly monomial(RingPtr<K> ring, const Monomial& m, Element c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  // Sorts and combines like terms.
  static Poly from_terms(RingPtr<K> ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return nonzero().terms_.front(); }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Element& leading_coeff() const { return leading_term().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree);
    return d;
  }

  // Common total degree of all terms, or nullopt if not homogeneous.
  std::optional<unsigned> homogeneous_degree() const {
    if (is_zero()) throw std::invalid_argument("homogeneous_degree of the zero polynomial");
    const std::uint32_t d = terms_.front().mono.degree;
    for (const Term& t : terms_) {
      if (t.mono.degree != d) return std::nullopt;
    }
    return d;
  }
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.exps[var] != 0; });
  }

  // Coefficient of m (zero if absent).
  Element coefficient(const Monomial& m) const {
    for (const Term& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return ring_->field().zero();
  }

  Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
  Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator-(Poly a) {
    for (Term& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return from_terms(a.ring_, std::move(out));
  }

  Poly scaled(const Element& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly p = *this;
    for (Term& t : p.terms_) t.coeff = t.coeff * c;
    return p;
  }

  Poly mul_term(const Monomial& m, const Element& c) const {
    Poly p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
  }

  Poly pow(unsigned e) const {
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  Poly monic() const {
    if (is_zero() || leading_coeff().is_one()) return *this;
    return scaled(inverse(leading_coeff()));
  }

  Poly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
      const unsigned e = t.mono.exps.at(var);
      if (e == 0) continue;
      Term d{t.mono, t.coeff * ring_->field().from_int(static_cast<long>(e))};
      d.mono.exps[var] -= 1;
      d.mono.degree -= 1;
      if (!d.coeff.is_zero()) out.push_back(std::move(d));
    }
    Poly p(ring_);
    p.terms_ = std::move(out);  // order preserved for the supported orders
    p.normalize();
    return p;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != ring_->nvars()) {
      throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                  " coordinates, ring has " + std::to_string(ring_->nvars()) +
                                  " variables");
    }
    std::vector<std::vector<Element>> powers(point.size());
    Element acc = ring_->field().zero();
    for (const Term& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        const unsigned e = t.mono.exps[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(ring_->field().one());
        while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
        v = v * pw[e];
      }
      acc += v;
    }
    return acc;
  }

  // Replaces variable i by images[i]; all images share one target ring.
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars()) throw std::invalid_argument("substitute: wrong image count");
    const RingPtr<K>& target = images.front().ring();
    std::vector<std::vector<Poly>> powers(images.size());
    Poly acc(target);
    for (const Term& t : terms_) {
      Poly v = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i) {
        const unsigned e = t.mono.exps[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, 1));
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        v = v * pw[e];
      }
      acc += v;
    }
    return acc;
  }

  // Moves the polynomial into `target`, sending variable i to var_map[i].
  Poly remap(RingPtr<K> target, const std::vector<std::size_t>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      Term u{Monomial{}, t.coeff};
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.mono.exps[i] == 0) continue;
        u.mono.exps.at(var_map.at(i)) = t.mono.exps[i];
      }
      u.mono.degree = t.mono.degree;
      out.push_back(std::move(u));
    }
    return from_terms(std::move(target), std::move(out));
  }

  // Same variables, possibly a different monomial order.
  Poly reordered(RingPtr<K> target) const {
    Poly p(std::move(target));
    p.terms_ = terms_;
    p.normalize();
    return p;
  }

  template <class K2, class Fn>
  Poly<K2> map_coefficients(RingPtr<K2> target, Fn&& fn) const {
    std::vector<typename Poly<K2>::Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      auto c = fn(t.coeff);
      if (!c.is_zero()) out.push_back({t.mono, std::move(c)});
    }
    return Poly<K2>::from_terms(std::move(target), std::move(out));
  }

  // *this -= c * m * g, where the leading product cancels terms_[start]
  // or lands at or after it.
  void sub_mul(const Element& c, const Monomial& m, const Poly& g, std::size_t start = 0) {
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    for (std::size_t i = 0; i < start; ++i) out.push_back(std::move(terms_[i]));
    std::size_t i = start, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      Monomial gm = g.terms_[j].mono * m;
      const int cmp = ord.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({gm, -(c * g.terms_[j++].coeff)});
      } else {
        Element v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!v.is_zero()) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < g.terms_.size(); ++j) out.push_back({g.terms_[j].mono * m, -(c * g.terms_[j].coeff)});
    terms_ = std::move(out);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      std::string c = t.coeff.to_string();
      std::string term;
      if (t.mono.is_one()) {
        term = needs_parens(c) ? "(" + c + ")" : c;
      } else {
        const std::string m = monomial_to_string(t.mono, ring_->variables());
        if (c == "1") term = m;
        else if (c == "-1") term = "-" + m;
        else if (needs_parens(c)) term = "(" + c + ")*" + m;
        else term = c + "*" + m;
      }
      if (out.empty()) out = term;
      else if (term.front() == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

 private:
  static bool needs_parens(const std::string& c) {
    return c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
  }

  const Poly& nonzero() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *this;
  }

  void check_ring(const Poly& b) const {
    if (ring_ != b.ring_ && !ring_->same_as(*b.ring_)) {
      throw std::invalid_argument("polynomials belong to different rings");
    }
  }

  void normalize() {
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    a.check_ring(b);
    const MonomialOrder& ord = a.ring_->order();
    Poly out(a.ring_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const int cmp = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const Term& t = b.terms_[j++];
        out.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        Element v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!v.is_zero()) out.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.size(); ++j) {
      const Term& t = b.terms_[j];
      out.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return out;
  }

  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

}  // namespace canmap

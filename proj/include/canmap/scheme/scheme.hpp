#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canmap/arith/matrix.hpp"
#include "canmap/groebner/operations.hpp"
#include "canmap/groebner/radical.hpp"
#include "canmap/poly/jacobian.hpp"

namespace canmap {

// Closed subscheme of P^n cut out by a homogeneous ideal.
template <class K>
class ProjScheme {
 public:
  explicit ProjScheme(Ideal<K> ideal) : ideal_(std::move(ideal)) {
    if (!ideal_.is_homogeneous()) throw std::invalid_argument("projective scheme needs a homogeneous ideal");
  }
  ProjScheme(const RingPtr<K>& ring, std::vector<Poly<K>> gens) : ProjScheme(Ideal<K>(ring, std::move(gens))) {}

  const Ideal<K>& ideal() const { return ideal_; }
  const RingPtr<K>& ring() const { return ideal_.ring(); }
  std::size_t ambient_dim() const { return ring()->nvars() - 1; }

  DimDegree dim_degree() const { return hilbert_dim_degree(ideal_); }
  int dimension() const { return dim_degree().dimension; }
  Integer degree() const { return dim_degree().degree; }
  bool is_empty() const { return dimension() < 0; }

 private:
  Ideal<K> ideal_;
};

// Point of P^n scaled so that its last nonzero coordinate is 1.
template <class K>
class RationalPoint {
 public:
  using Element = typename K::Element;

  explicit RationalPoint(std::vector<Element> coords) : coords_(std::move(coords)) {
    std::size_t last = coords_.size();
    while (last > 0 && coords_[last - 1].is_zero()) --last;
    if (last == 0) throw std::invalid_argument("a projective point needs a nonzero coordinate");
    const Element inv = inverse(coords_[last - 1]);
    for (auto& c : coords_) {
      if (!c.is_zero()) c = c * inv;
    }
  }

  const std::vector<Element>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += " : ";
      s += coords_[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Element> coords_;
};

template <class K>
struct PointCertificate {
  std::vector<RationalPoint<K>> points;
  Integer reduced_degree;
  // All points of the scheme over any extension are among `points`.
  bool complete = false;
};

namespace detail {

template <class K>
void check_ambient(const ProjScheme<K>& x, const ProjScheme<K>& y) {
  if (!x.ring()->same_as(*y.ring())) throw std::invalid_argument("schemes live in different ambient spaces");
}

}  // namespace detail

// Jacobian criterion for a complete intersection of `codim` generators.
template <class K>
ProjScheme<K> singular_subscheme(const ProjScheme<K>& x, std::size_t codim) {
  const auto& gens = x.ideal().generators();
  if (gens.size() != codim) {
    throw std::invalid_argument("singular_subscheme supports complete intersections only: " +
                                std::to_string(gens.size()) + " generators for codimension " +
                                std::to_string(codim));
  }
  if (codim == 0) return x;
  return ProjScheme<K>(x.ideal().with(minors(jacobian(gens), codim)));
}

template <class K>
ProjScheme<K> reduced_subscheme(const ProjScheme<K>& x) {
  return ProjScheme<K>(radical(x.ideal()));
}

template <class K>
ProjScheme<K> scheme_union(const ProjScheme<K>& x, const ProjScheme<K>& y) {
  detail::check_ambient(x, y);
  return ProjScheme<K>(intersect(x.ideal(), y.ideal()));
}

template <class K>
ProjScheme<K> scheme_intersection(const ProjScheme<K>& x, const ProjScheme<K>& y) {
  detail::check_ambient(x, y);
  return ProjScheme<K>(x.ideal() + y.ideal());
}

template <class K>
ProjScheme<K> with_equations(const ProjScheme<K>& x, const std::vector<Poly<K>>& extra) {
  return ProjScheme<K>(x.ideal().with(extra));
}

template <class K>
bool contains_point(const ProjScheme<K>& x, const RationalPoint<K>& p) {
  if (p.size() != x.ring()->nvars()) {
    throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                std::to_string(x.ring()->nvars()));
  }
  for (const auto& g : x.ideal().generators()) {
    if (!g.evaluate(p.coords()).is_zero()) return false;
  }
  return true;
}

// The candidates lying on x, in input order.
template <class K>
std::vector<RationalPoint<K>> points_on(const ProjScheme<K>& x, const std::vector<RationalPoint<K>>& candidates) {
  std::vector<RationalPoint<K>> out;
  for (const auto& p : candidates) {
    if (contains_point(x, p)) out.push_back(p);
  }
  return out;
}

// Distinct points on x number at most deg(x_red) <= deg(x); equality with
// deg(x) settles completeness without computing the radical.
template <class K>
PointCertificate<K> certify_zero_dim_points(const ProjScheme<K>& x, const std::vector<RationalPoint<K>>& candidates) {
  const DimDegree dd = x.dim_degree();
  if (dd.dimension > 0) throw std::invalid_argument("certify_zero_dim_points: scheme has positive dimension");
  PointCertificate<K> cert;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!contains_point(x, candidates[i])) {
      throw std::invalid_argument("candidate " + std::to_string(i) + " " + candidates[i].to_string() +
                                  " does not lie on the scheme");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (candidates[j] == candidates[i]) {
        throw std::invalid_argument("candidates " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
    }
    cert.points.push_back(candidates[i]);
  }
  const Integer count = static_cast<unsigned long>(cert.points.size());
  cert.reduced_degree = dd.degree == count ? count : reduced_subscheme(x).degree();
  cert.complete = cert.reduced_degree == count;
  return cert;
}

// Equality of the saturations by the irrelevant ideal.
template <class K>
bool scheme_equal(const ProjScheme<K>& x, const ProjScheme<K>& y) {
  detail::check_ambient(x, y);
  const Ideal<K> m = irrelevant_ideal(x.ring());
  return saturate(x.ideal(), m).groebner() == saturate(y.ideal(), m).groebner();
}

namespace detail {

template <class K>
Matrix<K> jacobian_at(const std::vector<Poly<K>>& gens, const std::vector<typename K::Element>& p) {
  Matrix<K> m;
  for (const auto& row : jacobian(gens)) {
    Vec<K> v;
    for (const auto& entry : row) v.push_back(entry.evaluate(p));
    m.push_back(std::move(v));
  }
  return m;
}

}  // namespace detail

// x is taken to be reduced: a point is smooth iff the Jacobian of the
// reduced Groebner basis has rank equal to the codimension there.
template <class K>
bool smooth_at_points(const ProjScheme<K>& x, const std::vector<RationalPoint<K>>& pts) {
  const int dim = x.dimension();
  if (dim < 0) return true;
  const std::size_t codim = x.ambient_dim() - static_cast<std::size_t>(dim);
  const auto& gens = x.ideal().groebner().elements;
  for (const auto& p : pts) {
    if (!contains_point(x, p)) throw std::invalid_argument("point " + p.to_string() + " is not on the scheme");
    if (rank<K>(detail::jacobian_at(gens, p.coords())) != codim) return false;
  }
  return true;
}

// Ordinary double point test for a complete intersection V(g_1..g_c) at a
// point where the Jacobian drops rank by exactly one: the Hessian of the
// vanishing combination, restricted to the tangent space of the others,
// must be nondegenerate. Computed in the affine chart of a nonzero
// coordinate.
template <class K>
bool is_ordinary_double_point(const ProjScheme<K>& x, const RationalPoint<K>& p) {
  const auto& gens = x.ideal().generators();
  const RingPtr<K>& ring = x.ring();
  const K& field = ring->field();
  const std::size_t n = ring->nvars();
  if (!contains_point(x, p)) throw std::invalid_argument("point " + p.to_string() + " is not on the scheme");
  std::size_t chart = n;
  while (chart > 0 && p.coords()[chart - 1].is_zero()) --chart;
  --chart;  // p.coords()[chart] == 1 after normalization
  std::vector<Poly<K>> affine_images;
  for (std::size_t i = 0; i < n; ++i) {
    affine_images.push_back(i == chart ? Poly<K>::constant(ring, 1) : Poly<K>::variable(ring, i));
  }
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != chart) coords.push_back(i);
  }
  std::vector<Poly<K>> local;
  for (const auto& g : gens) local.push_back(g.substitute(affine_images));

  const std::vector<typename K::Element>& pt = p.coords();
  Matrix<K> jac;  // c x (n-1)
  for (const auto& g : local) {
    Vec<K> row;
    for (std::size_t v : coords) row.push_back(g.derivative(v).evaluate(pt));
    jac.push_back(std::move(row));
  }
  if (rank<K>(jac) + 1 != local.size()) return false;
  // lambda with lambda^T jac = 0.
  Matrix<K> jac_t(coords.size(), Vec<K>(local.size(), field.zero()));
  for (std::size_t i = 0; i < local.size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j) jac_t[j][i] = jac[i][j];
  }
  Matrix<K> lambda = kernel(field, jac_t, local.size());
  Poly<K> combo(ring);
  for (std::size_t i = 0; i < local.size(); ++i) combo += local[i].scaled(lambda.front()[i]);
  Matrix<K> tangent = kernel(field, jac, coords.size());
  Matrix<K> hess(coords.size(), Vec<K>(coords.size(), field.zero()));
  for (std::size_t a = 0; a < coords.size(); ++a) {
    const Poly<K> da = combo.derivative(coords[a]);
    for (std::size_t b = 0; b < coords.size(); ++b) hess[a][b] = da.derivative(coords[b]).evaluate(pt);
  }
  // Gram matrix of the Hessian on the tangent space.
  Matrix<K> gram(tangent.size(), Vec<K>(tangent.size(), field.zero()));
  for (std::size_t a = 0; a < tangent.size(); ++a) {
    const Vec<K> ha = apply(field, hess, tangent[a]);
    for (std::size_t b = 0; b < tangent.size(); ++b) {
      auto acc = field.zero();
      for (std::size_t j = 0; j < coords.size(); ++j) acc += ha[j] * tangent[b][j];
      gram[a][b] = acc;
    }
  }
  return rank<K>(gram) == tangent.size();
}

}  // namespace canmap

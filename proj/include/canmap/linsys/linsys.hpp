#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "canmap/arith/matrix.hpp"
#include "canmap/groebner/operations.hpp"
#include "canmap/scheme/scheme.hpp"

namespace canmap {

// Linear system of degree-d hypersurfaces: a subspace of the degree-d forms,
// stored as independent coefficient rows over a fixed monomial list.
template <class K>
class LinSys {
 public:
  LinSys(RingPtr<K> ring, unsigned degree, Matrix<K> basis)
      : ring_(std::move(ring)), degree_(degree), monomials_(sorted_monomials(ring_, degree)) {
    for (const auto& row : basis) {
      if (row.size() != monomials_.size()) throw std::invalid_argument("LinSys: basis row has the wrong length");
    }
    row_reduce<K>(basis);
    basis_ = std::move(basis);
  }

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t ambient_dim() const { return ring_->nvars() - 1; }
  unsigned degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Matrix<K>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::vector<Poly<K>> members() const {
    std::vector<Poly<K>> out;
    for (const auto& row : basis_) out.push_back(from_coefficients(ring_, monomials_, row));
    return out;
  }

  // Restricts to the combinations sum c_i b_i with c in the span of `combos`.
  LinSys restrict(const Matrix<K>& combos) const {
    Matrix<K> rows;
    for (const auto& c : combos) {
      Vec<K> v(monomials_.size(), ring_->field().zero());
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (!basis_[i][j].is_zero()) v[j] += c[i] * basis_[i][j];
        }
      }
      rows.push_back(std::move(v));
    }
    return LinSys(ring_, degree_, std::move(rows));
  }

 private:
  RingPtr<K> ring_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  Matrix<K> basis_;
};

template <class K>
LinSys<K> complete_system(const RingPtr<K>& ring, unsigned d) {
  if (d < 1) throw std::invalid_argument("complete_system: degree must be positive");
  const std::size_t count = sorted_monomials(ring, d).size();
  Matrix<K> rows(count, Vec<K>(count, ring->field().zero()));
  for (std::size_t i = 0; i < count; ++i) rows[i][i] = ring->field().one();
  return LinSys<K>(ring, d, std::move(rows));
}

namespace detail {

template <class K>
void check_ambient(const LinSys<K>& l, const RingPtr<K>& ring) {
  if (!l.ring()->same_as(*ring)) throw std::invalid_argument("linear system and scheme live in different ambient spaces");
}

// Coefficient rows of NF(b_i) over the system's monomials.
template <class K>
Matrix<K> normal_form_rows(const LinSys<K>& l, const ReducedGB<K>& gb) {
  Matrix<K> out;
  for (const auto& f : l.members()) out.push_back(coefficient_vector(normal_form(f, gb), l.monomials()));
  return out;
}

template <class K>
Matrix<K> transpose(const K& field, const Matrix<K>& m, std::size_t rows_if_empty) {
  const std::size_t cols = m.empty() ? rows_if_empty : m.front().size();
  Matrix<K> t(cols, Vec<K>(m.size(), field.zero()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace detail

// Members of L contained in the ideal of Z.
template <class K>
LinSys<K> through_scheme(const LinSys<K>& l, const ProjScheme<K>& z) {
  detail::check_ambient(l, z.ring());
  const K& field = l.ring()->field();
  // c with sum c_i NF(b_i) = 0: kernel of the transposed NF matrix.
  Matrix<K> nf = detail::normal_form_rows(l, z.ideal().groebner());
  Matrix<K> combos = kernel(field, detail::transpose(field, nf, l.monomials().size()), l.dimension());
  return l.restrict(combos);
}

template <class K>
LinSys<K> through_points(const LinSys<K>& l, const std::vector<RationalPoint<K>>& pts) {
  const K& field = l.ring()->field();
  Matrix<K> eval;
  const auto members = l.members();
  for (const auto& p : pts) {
    if (p.size() != l.ring()->nvars()) throw std::invalid_argument("through_points: point outside the ambient space");
    Vec<K> row;
    for (const auto& f : members) row.push_back(f.evaluate(p.coords()));
    eval.push_back(std::move(row));
  }
  return l.restrict(kernel(field, std::move(eval), l.dimension()));
}

template <class K>
struct Trace {
  std::size_t dimension = 0;
  // Members of L whose classes modulo I_X form a basis of the trace.
  std::vector<Poly<K>> sections;
};

// dim L - dim(L ∩ (I_X)_d), via normal forms modulo a GB of I_X.
template <class K>
Trace<K> trace_dimension(const LinSys<K>& l, const ProjScheme<K>& x) {
  detail::check_ambient(l, x.ring());
  Matrix<K> nf = detail::normal_form_rows(l, x.ideal().groebner());
  IncrementalSpan<K> span(l.ring()->field(), l.monomials().size());
  Trace<K> t;
  const auto members = l.members();
  for (std::size_t i = 0; i < nf.size(); ++i) {
    if (!span.add(nf[i])) t.sections.push_back(members[i]);
  }
  t.dimension = span.rank();
  return t;
}

// Same quantity from an explicit basis of (I_X)_d: dim(L + I_d) - dim I_d.
template <class K>
std::size_t trace_dimension_by_slice(const LinSys<K>& l, const ProjScheme<K>& x) {
  detail::check_ambient(l, x.ring());
  HomogeneousSlice<K> slice = homogeneous_part(x.ideal(), static_cast<int>(l.degree()));
  Matrix<K> both = l.basis();
  both.insert(both.end(), slice.basis.begin(), slice.basis.end());
  return rank<K>(both) - rank<K>(slice.basis);
}

}  // namespace canmap

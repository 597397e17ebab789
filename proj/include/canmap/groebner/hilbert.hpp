#pragma once

#include <cstddef>
#include <vector>

#include "canmap/arith/rational.hpp"
#include "canmap/poly/monomial.hpp"

namespace canmap {

struct HilbertData {
  // HS(t) = numerator(t) / (1 - t)^nvars
  std::vector<Integer> numerator;
  // Krull dimension of R / I.
  int krull_dim = 0;
  // h(1) where numerator = (1 - t)^(nvars - krull_dim) * h(t).
  Integer multiplicity;

  int projective_dim() const { return krull_dim - 1; }
  // Degree of the projective scheme; 0 for the empty scheme.
  Integer projective_degree() const { return krull_dim == 0 ? Integer(0) : multiplicity; }
};

// Hilbert series of k[x_0..x_{n-1}] / (monomials), by recursive pivot splitting.
HilbertData hilbert_series(std::vector<Monomial> monomials, std::size_t nvars);

}  // namespace canmap

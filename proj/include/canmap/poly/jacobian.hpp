#pragma once

#include <stdexcept>
#include <vector>

#include "canmap/poly/poly.hpp"

namespace canmap {

template <class K>
using PolyMatrix = std::vector<std::vector<Poly<K>>>;

// Rows are the polynomials, columns the ring variables.
template <class K>
PolyMatrix<K> jacobian(const std::vector<Poly<K>>& fs) {
  PolyMatrix<K> m;
  for (const Poly<K>& f : fs) {
    if (!f.ring()->same_as(*fs.front().ring())) throw std::invalid_argument("jacobian: mixed rings");
    std::vector<Poly<K>> row;
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) row.push_back(f.derivative(v));
    m.push_back(std::move(row));
  }
  return m;
}

namespace detail {

template <class K>
Poly<K> determinant(const PolyMatrix<K>& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  // Laplace expansion along the first selected row.
  Poly<K> acc(m[rows[0]][cols[0]].ring());
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Poly<K>& entry = m[rows[0]][cols[j]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c) {
      if (c != j) sub_cols.push_back(cols[c]);
    }
    Poly<K> term = entry * determinant(m, sub_rows, sub_cols);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// All k x k minors: row subsets in lexicographic order, and for each of them
// column subsets in lexicographic order.
template <class K>
std::vector<Poly<K>> minors(const PolyMatrix<K>& m, std::size_t k) {
  if (m.empty() || k == 0 || k > m.size() || k > m.front().size()) {
    throw std::invalid_argument("minors: k exceeds the matrix dimensions");
  }
  std::vector<std::vector<std::size_t>> rows, cols;
  detail::subsets(m.size(), k, rows);
  detail::subsets(m.front().size(), k, cols);
  std::vector<Poly<K>> out;
  out.reserve(rows.size() * cols.size());
  for (const auto& r : rows) {
    for (const auto& c : cols) out.push_back(detail::determinant(m, r, c));
  }
  return out;
}

}  // namespace canmap

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace canmap {

template <class K>
using Vec = std::vector<typename K::Element>;

template <class K>
using Matrix = std::vector<Vec<K>>;

// Reduced row echelon form over a field, computed in place. Returns the
// pivot column of each nonzero row; zero rows are removed.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const auto inv = inverse(m[r][c]);
    for (auto& e : m[r]) {
      if (!e.is_zero()) e = e * inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const auto f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return row_reduce<K>(m).size();
}

// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
template <class K>
Matrix<K> kernel(const K& field, Matrix<K> m, std::size_t cols) {
  std::vector<std::size_t> pivots = row_reduce<K>(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<K> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix-vector product.
template <class K>
Vec<K> apply(const K& field, const Matrix<K>& m, const Vec<K>& x) {
  Vec<K> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    auto acc = field.zero();
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero() && !x[j].is_zero()) acc += row[j] * x[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// Echelon basis grown one vector at a time; reports the first dependency.
template <class K>
class IncrementalSpan {
 public:
  IncrementalSpan(K field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  // Adds v (the n-th vector added). If v lies in the span of the previous
  // ones, returns c with sum_i c_i v_i = 0 and c_n = 1, and does not grow.
  std::optional<Vec<K>> add(Vec<K> v) {
    if (v.size() != dim_) throw std::invalid_argument("IncrementalSpan: wrong dimension");
    const std::size_t n = count_;
    Vec<K> combo(n + 1, field_.zero());
    combo[n] = field_.one();
    for (auto& row : rows_) row.combo.resize(n + 1, field_.zero());
    for (const Row& row : rows_) {
      if (v[row.pivot].is_zero()) continue;
      const auto f = v[row.pivot];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!row.vec[j].is_zero()) v[j] -= f * row.vec[j];
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (!row.combo[j].is_zero()) combo[j] -= f * row.combo[j];
      }
    }
    ++count_;
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
    if (pivot == dim_) return combo;
    const auto inv = inverse(v[pivot]);
    for (auto& e : v) {
      if (!e.is_zero()) e = e * inv;
    }
    for (auto& e : combo) {
      if (!e.is_zero()) e = e * inv;
    }
    // Keep earlier rows reduced against the new pivot.
    for (Row& row : rows_) {
      if (row.vec[pivot].is_zero()) continue;
      const auto f = row.vec[pivot];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!v[j].is_zero()) row.vec[j] -= f * v[j];
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (!combo[j].is_zero()) row.combo[j] -= f * combo[j];
      }
    }
    rows_.push_back({std::move(v), std::move(combo), pivot});
    return std::nullopt;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Vec<K> vec;
    Vec<K> combo;
    std::size_t pivot;
  };

  K field_;
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

}  // namespace canmap

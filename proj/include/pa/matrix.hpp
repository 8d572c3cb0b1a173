#pragma once

// Exact dense linear algebra over an arbitrary field type K.  K needs
// +,-,*,/, unary -, ==, a K(0)/K(1) construction from int, and exact
// arithmetic; Gauss-Jordan elimination with division is then exact.

#include <vector>

#include "pa/errors.hpp"

namespace pa {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> identity_matrix(int n) {
  Matrix<K> m(n, std::vector<K>(n, K(0)));
  for (int i = 0; i < n; ++i) m[i][i] = K(1);
  return m;
}

// Row-reduce in place; returns the pivot column of each pivot row.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!(m[i][c] == K(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    K inv = K(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == K(0)) continue;
      K f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank_of(Matrix<K> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right nullspace, one vector per free column; the free
// coordinate is set to 1 (a pivot-normalized canonical form).
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = rref(m);
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
  std::vector<std::vector<K>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<K> v(cols, K(0));
    v[c] = K(1);
    for (int pc = 0; pc < cols; ++pc) {
      int pr = pivot_of_col[pc];
      if (pr >= 0) v[pc] = -m[pr][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Span helpers: rows of `a` are vectors.  dim of the span, and a basis of
// the orthogonal complement under the standard pairing.
template <class K>
int span_dim(const Matrix<K>& a) {
  return a.empty() ? 0 : rank_of(a);
}

template <class K>
Matrix<K> complement_basis(const Matrix<K>& a, int ambient) {
  if (a.empty()) return identity_matrix<K>(ambient);
  return nullspace(a);
}

// dim of the intersection of row spans, via (^ S_i)^perp = sum S_i^perp.
template <class K>
int intersection_dim(const std::vector<Matrix<K>>& spans, int ambient) {
  Matrix<K> stacked;
  for (const auto& s : spans)
    for (const auto& row : complement_basis(s, ambient)) stacked.push_back(row);
  if (stacked.empty()) return ambient;
  return ambient - rank_of(stacked);
}

// Basis of the intersection of row spans.
template <class K>
Matrix<K> intersection_basis(const std::vector<Matrix<K>>& spans, int ambient) {
  Matrix<K> stacked;
  for (const auto& s : spans)
    for (const auto& row : complement_basis(s, ambient)) stacked.push_back(row);
  if (stacked.empty()) return identity_matrix<K>(ambient);
  return nullspace(stacked);
}

}  // namespace pa

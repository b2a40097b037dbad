#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "atlas/cyclotomic.hpp"
#include "atlas/rational.hpp"

namespace atlas {

// Dense row-major matrices over an exact field (Rational or RealCyclotomic).
template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

inline bool scalar_is_zero(const Integer& x) { return x == 0; }
inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const RealCyclotomic& x) { return x.is_zero(); }

template <class T>
Mat<T> identity_matrix(size_t n) {
  Mat<T> m(n, Vec<T>(n, T(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  assert(!a.empty() && a[0].size() == b.size());
  Mat<T> c(a.size(), Vec<T>(b[0].size(), T(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (scalar_is_zero(a[i][k])) continue;
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& a, const Vec<T>& x) {
  assert(a.empty() || a[0].size() == x.size());
  Vec<T> y(a.size(), T(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

template <class T>
Mat<T> transposed(const Mat<T>& a) {
  if (a.empty()) return {};
  Mat<T> t(a[0].size(), Vec<T>(a.size(), T(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Reduced row echelon form in place; returns the pivot column of each pivot
// row, in order.
template <class T>
std::vector<size_t> echelonize(Mat<T>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && scalar_is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    T inv = T(1) / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || scalar_is_zero(m[i][col])) continue;
      T f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int matrix_rank(Mat<T> m) {
  return static_cast<int>(echelonize(m).size());
}

// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class T>
Mat<T> kernel_basis(Mat<T> m, size_t cols) {
  assert(m.empty() || m[0].size() == cols);
  std::vector<size_t> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Mat<T> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(cols, T(0));
    v[free] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < free) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of m x = rhs for an invertible square matrix.
template <class T>
Vec<T> solve_square(Mat<T> m, Vec<T> rhs) {
  const size_t n = m.size();
  assert(n > 0 && m[0].size() == n && rhs.size() == n);
  for (size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  std::vector<size_t> pivots = echelonize(m);
  assert(pivots.size() == n);
  Vec<T> x(n, T(0));
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

template <class T>
Mat<T> inverse_matrix(Mat<T> m) {
  const size_t n = m.size();
  assert(n > 0 && m[0].size() == n);
  for (size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, T(0));
    m[i][n + i] = T(1);
  }
  std::vector<size_t> pivots = echelonize(m);
  assert(pivots.size() == n);
  Mat<T> inv(n, Vec<T>(n, T(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Smith normal form u a v = d of an integer matrix: u, v unimodular, d
// diagonal with d[k][k] dividing d[k+1][k+1].
struct SmithForm {
  Mat<Integer> u, d, v;
};
SmithForm smith_normal_form(Mat<Integer> a);

}  // namespace atlas

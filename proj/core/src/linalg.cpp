#include "atlas/matrix.hpp"

#include <cstdlib>

namespace atlas {
namespace {

void swap_rows(Mat<Integer>& m, size_t i, size_t j) { std::swap(m[i], m[j]); }

void swap_cols(Mat<Integer>& m, size_t i, size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row i -= f * row j
void row_op(Mat<Integer>& m, size_t i, size_t j, const Integer& f) {
  for (size_t c = 0; c < m[i].size(); ++c) m[i][c] -= f * m[j][c];
}

// col i -= f * col j
void col_op(Mat<Integer>& m, size_t i, size_t j, const Integer& f) {
  for (auto& row : m) row[i] -= f * row[j];
}

}  // namespace

SmithForm smith_normal_form(Mat<Integer> a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  SmithForm s{identity_matrix<Integer>(rows), {}, identity_matrix<Integer>(cols)};

  for (size_t t = 0; t < rows && t < cols; ++t) {
    // Find a nonzero pivot below/right of (t, t).
    size_t pr = rows, pc = cols;
    for (size_t i = t; i < rows && pr == rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    swap_rows(a, t, pr);
    swap_rows(s.u, t, pr);
    swap_cols(a, t, pc);
    swap_rows(s.v, t, pc);  // tracking v as row ops on v^T; transpose at end

    // Clear row and column t; restarts until the pivot divides everything it
    // eliminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        row_op(a, i, t, q);
        row_op(s.u, i, t, q);
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up, retry
          swap_rows(a, t, i);
          swap_rows(s.u, t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        col_op(a, j, t, q);
        row_op(s.v, j, t, q);
        if (a[t][j] != 0) {
          swap_cols(a, t, j);
          swap_rows(s.v, t, j);
          dirty = true;
        }
      }
    }
    // Divisibility chain: fold any entry the pivot does not divide into
    // column t and restart the elimination of this corner.
    for (size_t i = t + 1; i < rows; ++i)
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[i][j] % a[t][t] == 0) continue;
        // col t += col j, then re-eliminate
        col_op(a, t, j, Integer(-1));
        row_op(s.v, t, j, Integer(-1));
        i = rows;  // restart outer pivot loop body via re-elimination below
        break;
      }
    // Re-run the clearing loop if the fold above reintroduced entries.
    bool again = false;
    for (size_t i = t + 1; i < rows; ++i) again = again || a[i][t] != 0;
    for (size_t j = t + 1; j < cols; ++j) again = again || a[t][j] != 0;
    if (again) {
      --t;  // redo this corner from the pivot search
      continue;
    }
    if (a[t][t] < 0) {
      a[t][t] = -a[t][t];
      for (size_t c = 0; c < cols; ++c) s.v[t][c] = -s.v[t][c];
    }
  }

  s.v = transposed(s.v);
  s.d = std::move(a);
  return s;
}

}  // namespace atlas

// linalg.hpp — exact Gaussian elimination over the rationals.
//
// Two small tools are enough for everything in this library:
//   * SpanBasis: an incrementally maintained reduced row-echelon basis,
//     used for rational-span membership tests (span_intersect, restrict).
//   * solve_square: plain Gaussian elimination with partial (first nonzero)
//     pivoting for the Gram systems behind restrict() and the fundamental
//     weights.

#pragma once

#include <vector>

#include "rational.hpp"

namespace gvm {

class SpanBasis {
 public:
  // Try to add v to the span.  Returns true when v was independent of the
  // current basis (the span grew).
  bool add(const Vec& v) {
    Vec r = reduce(v);
    int p = first_nonzero(r);
    if (p < 0) return false;
    Rat inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    // Keep the basis fully reduced.
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][p] != 0) {
        Rat c = rows_[i][p];
        for (size_t k = 0; k < rows_[i].size(); ++k) rows_[i][k] -= c * r[k];
      }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const Vec& v) const { return first_nonzero(reduce(v)) < 0; }

  size_t rank() const { return rows_.size(); }

 private:
  Vec reduce(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      Rat c = v[pivots_[i]];
      if (c != 0)
        for (size_t k = 0; k < v.size(); ++k) v[k] -= c * rows_[i][k];
    }
    return v;
  }

  static int first_nonzero(const Vec& v) {
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) return static_cast<int>(k);
    return -1;
  }

  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Solve A x = b for square A; throws InternalError when A is singular
// (callers only ever build nonsingular Gram/Cartan systems).
inline Vec solve_square(std::vector<Vec> a, Vec b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("solve_square: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = 1 / a[col][col];
    for (size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat c = a[row][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= c * a[col][k];
      b[row] -= c * b[col];
    }
  }
  return b;
}

}  // namespace gvm

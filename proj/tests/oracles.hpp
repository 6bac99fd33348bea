// Test-only oracles, kept independent of the engine's solver paths:
//  - an intertwiner solver with entrywise equation assembly and its own
//    echelon/back-substitution elimination,
//  - a quadratic-form (n=2) / alternative-grid (n>2) decision for the
//    existence of an invertible element in a span,
//  - the rational canonical form ("Jordan") similarity test for single 2x2
//    matrices.

#pragma once

#include <cstddef>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/scalar.hpp"

namespace oracle {

using hecke::GaussianRational;
using hecke::Matrix;

using Row = std::vector<GaussianRational>;

// Solves T * lhs[k] = rhs[k] * T entrywise: equation (k, i, j) reads
// sum_q T[i][q] lhs[k][q][j] - sum_q rhs[k][i][q] T[q][j] = 0 in the n*n
// unknowns T[p][q] (flattened p*n+q).  Forward elimination to echelon form,
// then back-substitution per free column.
inline std::vector<Matrix> intertwiner_basis(const std::vector<Matrix>& lhs,
                                             const std::vector<Matrix>& rhs) {
  const std::size_t n = lhs.front().rows();
  const std::size_t unknowns = n * n;

  std::vector<Row> rows;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Row row(unknowns);
        for (std::size_t q = 0; q < n; ++q) {
          row[i * n + q] += lhs[k].at(q, j);
          row[q * n + j] = row[q * n + j] - rhs[k].at(i, q);
        }
        rows.push_back(std::move(row));
      }
    }
  }

  // Forward elimination (echelon, pivots not normalized).
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) {
        continue;
      }
      const GaussianRational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < unknowns; ++c) {
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivot_cols) {
    is_pivot[c] = true;
  }

  std::vector<Matrix> basis;
  for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    Row x(unknowns);
    x[free_col] = GaussianRational::one();
    for (std::size_t r = rank; r-- > 0;) {
      const std::size_t pc = pivot_cols[r];
      GaussianRational acc;
      for (std::size_t c = pc + 1; c < unknowns; ++c) {
        if (!rows[r][c].is_zero() && !x[c].is_zero()) {
          acc += rows[r][c] * x[c];
        }
      }
      x[pc] = -acc / rows[r][pc];
    }
    Matrix t(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        t.at(p, q) = x[p * n + q];
      }
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

// Existence of an invertible element in the span of `basis`.  For n = 2 the
// determinant restricted to the span is a quadratic form; it vanishes
// identically iff det(B_i) = 0 for all i and the polarization
// det(B_i + B_j) - det(B_i) - det(B_j) vanishes for all i < j.  For larger n
// a grid over {0, 1, -1, 2, -2, ...} (n+1 points, degree-n form) decides.
inline bool span_has_invertible(const std::vector<Matrix>& basis) {
  if (basis.empty()) {
    return false;
  }
  const std::size_t n = basis.front().rows();

  if (n == 2) {
    for (const Matrix& b : basis) {
      if (!det(b).is_zero()) {
        return true;
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (!det(basis[i] + basis[j]).is_zero()) {
          return true;
        }
      }
    }
    return false;
  }

  std::vector<GaussianRational> points;
  points.emplace_back(0);
  for (long long v = 1; points.size() < n + 1; ++v) {
    points.emplace_back(v);
    if (points.size() < n + 1) {
      points.emplace_back(-v);
    }
  }
  const std::size_t k = basis.size();
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    Matrix t(n, n);
    for (std::size_t i = 0; i < k; ++i) {
      if (!points[idx[i]].is_zero()) {
        t = t + points[idx[i]] * basis[i];
      }
    }
    if (!det(t).is_zero()) {
      return true;
    }
    std::size_t pos = 0;
    while (pos < k && idx[pos] == n) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      return false;
    }
    ++idx[pos];
  }
}

inline bool similar(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs) {
  return span_has_invertible(intertwiner_basis(lhs, rhs));
}

// Similarity of single 2x2 matrices over any field extension: equal
// characteristic polynomials, and for a repeated eigenvalue both or neither
// scalar.
inline bool jordan_similar_2x2(const Matrix& a, const Matrix& b) {
  const GaussianRational tr_a = a.at(0, 0) + a.at(1, 1);
  const GaussianRational tr_b = b.at(0, 0) + b.at(1, 1);
  if (tr_a != tr_b || det(a) != det(b)) {
    return false;
  }
  const GaussianRational disc = tr_a * tr_a - GaussianRational(4) * det(a);
  if (!disc.is_zero()) {
    return true;  // distinct eigenvalues, both diagonalizable
  }
  const GaussianRational half(hecke::make_rational(1, 2));
  const Matrix scalar = Matrix::scalar(2, tr_a * half);
  return (a == scalar) == (b == scalar);
}

}  // namespace oracle

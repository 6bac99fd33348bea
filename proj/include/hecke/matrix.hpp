#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

// Dense matrix over Q(i).  Small sizes only; everything is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionMismatch("ragged matrix initializer");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = GaussianRational::one();
    }
    return m;
  }

  static Matrix scalar(std::size_t n, const GaussianRational& value) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = value;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<GaussianRational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool is_identity() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (at(r, c) != (r == c ? GaussianRational::one() : GaussianRational::zero())) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix addition shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.at(r, c) = a.at(r, c) + b.at(r, c);
    }
  }
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix subtraction shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.at(r, c) = a.at(r, c) - b.at(r, c);
    }
  }
  return out;
}

inline Matrix operator*(const GaussianRational& s, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(r, c) = s * m.at(r, c);
    }
  }
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const GaussianRational& arf = a.at(r, k);
      if (arf.is_zero()) {
        continue;
      }
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out.at(r, c) += arf * b.at(k, c);
      }
    }
  }
  return out;
}

inline Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(c, r) = m.at(r, c);
    }
  }
  return out;
}

inline GaussianRational det(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  Matrix a = m;
  GaussianRational result = GaussianRational::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      return GaussianRational::zero();
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
      }
      result = -result;
    }
    result *= a.at(col, col);
    const GaussianRational piv_inv = inv(a.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) {
        continue;
      }
      const GaussianRational factor = a.at(r, col) * piv_inv;
      for (std::size_t c = col; c < n; ++c) {
        a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
      }
    }
  }
  return result;
}

// Gauss-Jordan inverse; the round trip to the identity is re-checked so a
// returned inverse is always a certificate.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv_m = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      throw SingularMatrix("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv_m.at(pivot, c), inv_m.at(col, c));
      }
    }
    const GaussianRational piv_inv = inv(a.at(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      a.at(col, c) *= piv_inv;
      inv_m.at(col, c) *= piv_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) {
        continue;
      }
      const GaussianRational factor = a.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
        inv_m.at(r, c) = inv_m.at(r, c) - factor * inv_m.at(col, c);
      }
    }
  }
  if (!(m * inv_m).is_identity()) {
    throw InvariantViolation("inverse failed round-trip certification");
  }
  return inv_m;
}

inline bool is_invertible(const Matrix& m) {
  return m.is_square() && !det(m).is_zero();
}

inline Matrix power(const Matrix& m, long long k) {
  if (!m.is_square()) {
    throw DimensionMismatch("power of non-square matrix");
  }
  Matrix base = k < 0 ? inverse(m) : m;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Matrix acc = Matrix::identity(m.rows());
  while (e > 0) {
    if (e & 1ULL) {
      acc = acc * base;
    }
    base = base * base;
    e >>= 1ULL;
  }
  return acc;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (a.at(ar, ac).is_zero()) {
        continue;
      }
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = a.at(ar, ac) * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m.at(pivot, c), m.at(row, c));
      }
    }
    const GaussianRational piv_inv = inv(m.at(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.at(row, c) *= piv_inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) {
        continue;
      }
      const GaussianRational factor = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the right nullspace {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<GaussianRational>> nullspace(Matrix m) {
  const std::size_t n = m.cols();
  const std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    std::vector<GaussianRational> v(n);
    v[free_col] = GaussianRational::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -m.at(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b exactly; empty optional when inconsistent.
inline std::optional<std::vector<GaussianRational>> solve(
    const Matrix& a, const std::vector<GaussianRational>& b) {
  if (a.rows() != b.size()) {
    throw DimensionMismatch("solve: rhs length mismatch");
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      aug.at(r, c) = a.at(r, c);
    }
    aug.at(r, a.cols()) = b[r];
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) {
    return std::nullopt;  // pivot in augmented column
  }
  std::vector<GaussianRational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = aug.at(i, a.cols());
  }
  return x;
}

}  // namespace detail

// Linear subspace of n x m matrices spanned by an independent basis.
class MatrixSubspace {
 public:
  MatrixSubspace(std::size_t rows, std::size_t cols, std::vector<Matrix> basis)
      : rows_(rows), cols_(cols), basis_(std::move(basis)) {
    for (const Matrix& b : basis_) {
      if (b.rows() != rows_ || b.cols() != cols_) {
        throw DimensionMismatch("subspace basis element has wrong shape");
      }
    }
    if (flattened_rank() != basis_.size()) {
      throw InvariantViolation("subspace basis is linearly dependent");
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  Matrix combine(const std::vector<GaussianRational>& coeffs) const {
    if (coeffs.size() != basis_.size()) {
      throw DimensionMismatch("coefficient count does not match basis size");
    }
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!coeffs[i].is_zero()) {
        out = out + coeffs[i] * basis_[i];
      }
    }
    return out;
  }

  // Coordinates of `m` in the basis, when m lies in the span.
  std::optional<std::vector<GaussianRational>> coordinates_of(const Matrix& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) {
      return std::nullopt;
    }
    Matrix system(rows_ * cols_, basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const auto& flat = basis_[j].entries();
      for (std::size_t i = 0; i < flat.size(); ++i) {
        system.at(i, j) = flat[i];
      }
    }
    return detail::solve(system, m.entries());
  }

 private:
  std::size_t flattened_rank() const {
    if (basis_.empty()) {
      return 0;
    }
    Matrix stacked(basis_.size(), rows_ * cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& flat = basis_[i].entries();
      for (std::size_t j = 0; j < flat.size(); ++j) {
        stacked.at(i, j) = flat[j];
      }
    }
    return detail::rref_in_place(stacked).size();
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Matrix> basis_;
};

// Basis of {T : T * lhs[i] == rhs[i] * T for all i}.  Assembled through the
// Kronecker identity vec(T L) = (I (x) L^t) vec(T), vec(R T) = (R (x) I) vec(T)
// with row-major vec, and solved as one stacked nullspace computation.
inline MatrixSubspace intertwiner_space(const std::vector<Matrix>& lhs,
                                        const std::vector<Matrix>& rhs) {
  if (lhs.size() != rhs.size()) {
    throw DimensionMismatch("intertwiner: generator count mismatch");
  }
  if (lhs.empty()) {
    throw DimensionMismatch("intertwiner: empty generator family");
  }
  const std::size_t n = lhs.front().rows();
  for (const auto& fam : {std::cref(lhs), std::cref(rhs)}) {
    for (const Matrix& m : fam.get()) {
      if (!m.is_square() || m.rows() != n) {
        throw DimensionMismatch("intertwiner: generators must be square of equal size");
      }
    }
  }
  const std::size_t nn = n * n;
  Matrix system(lhs.size() * nn, nn);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    const Matrix block = kronecker(id, transpose(lhs[k])) - kronecker(rhs[k], id);
    for (std::size_t r = 0; r < nn; ++r) {
      for (std::size_t c = 0; c < nn; ++c) {
        system.at(k * nn + r, c) = block.at(r, c);
      }
    }
  }
  std::vector<Matrix> basis;
  for (auto& v : detail::nullspace(std::move(system))) {
    Matrix t(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        t.at(r, c) = v[r * n + c];
      }
    }
    // Post-hoc certification of each basis element.
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (t * lhs[k] != rhs[k] * t) {
        throw InvariantViolation("intertwiner basis element failed re-verification");
      }
    }
    basis.push_back(std::move(t));
  }
  return MatrixSubspace(n, n, std::move(basis));
}

// Deterministic search for an invertible element of the span.  det restricted
// to the span is a polynomial of degree <= n in the k coefficients, so if it
// vanishes on the whole grid {0..n}^k it vanishes identically and the span
// contains no invertible element.
inline std::optional<Matrix> find_invertible(const MatrixSubspace& space) {
  if (space.rows() != space.cols() || space.dimension() == 0) {
    return std::nullopt;
  }
  const std::size_t n = space.rows();
  const std::size_t k = space.dimension();

  for (const Matrix& b : space.basis()) {
    if (is_invertible(b)) {
      return b;
    }
  }

  double grid_size = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    grid_size *= static_cast<double>(n + 1);
  }
  if (grid_size > 8e6) {
    throw Error("find_invertible: coefficient grid out of supported range");
  }

  std::vector<long long> coeff(k, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && coeff[pos] == static_cast<long long>(n)) {
      coeff[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      break;  // grid exhausted: det is identically zero on the span
    }
    ++coeff[pos];
    Matrix t(n, n);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] != 0) {
        t = t + GaussianRational(coeff[i]) * space.basis()[i];
      }
    }
    if (is_invertible(t)) {
      return t;
    }
  }
  return std::nullopt;
}

inline std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r == 0 ? "[" : " [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) {
        s += ", ";
      }
      s += to_string(m.at(r, c));
    }
    s += "]";
    if (r + 1 < m.rows()) {
      s += ";";
    }
  }
  s += "]";
  return s;
}

}  // namespace hecke

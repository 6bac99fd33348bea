#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

// Small dense integer matrix; carries induced maps on first homology.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long long> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = 1;
    }
    return m;
  }

  long long& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  long long at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) {
    throw DimensionMismatch("integer matrix product shape mismatch");
  }
  IntMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const long long f = a.at(r, k);
      if (f == 0) {
        continue;
      }
      for (std::size_t c = 0; c < b.cols; ++c) {
        out.at(r, c) += f * b.at(k, c);
      }
    }
  }
  return out;
}

// [a | b] side by side.
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) {
    throw DimensionMismatch("hconcat row mismatch");
  }
  IntMatrix out(a.rows, a.cols + b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) {
      out.at(r, c) = a.at(r, c);
    }
    for (std::size_t c = 0; c < b.cols; ++c) {
      out.at(r, a.cols + c) = b.at(r, c);
    }
  }
  return out;
}

inline std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    s += r == 0 ? "[" : " [";
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c > 0) {
        s += ",";
      }
      s += std::to_string(m.at(r, c));
    }
    s += "]";
  }
  s += "]";
  return s;
}

}  // namespace hecke

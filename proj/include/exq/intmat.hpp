#pragma once

#include <initializer_list>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "exq/numeric.hpp"

namespace exq {

// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
  }
  IntMatrix(int r, int c, std::initializer_list<long long> vals) : IntMatrix(r, c) {
    if (static_cast<int>(vals.size()) != r * c) throw std::invalid_argument("bad initializer size");
    int i = 0;
    for (long long v : vals) entries[i++] = v;
  }

  Int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

  bool empty() const { return rows == 0 || cols == 0; }
  bool square() const { return rows == cols; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
      for (int k = 0; k < a.cols; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) c.entries[i] = a.entries[i] - b.entries[i];
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Int> out(rows);
    for (int i = 0; i < rows; ++i) {
      Int s = 0;
      for (int j = 0; j < cols; ++j) s += at(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  // Fraction-free Gaussian elimination (Bareiss).
  Int det() const {
    if (!square()) throw std::invalid_argument("determinant of non-square matrix");
    int n = rows;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m.at(k, k) == 0) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
          if (m.at(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
  }

  std::string key() const {
    std::string s = std::to_string(rows) + "x" + std::to_string(cols) + ":";
    for (const Int& v : entries) {
      s += v.str();
      s += ',';
    }
    return s;
  }
};

}  // namespace exq

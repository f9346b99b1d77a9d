#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "exq/intmat.hpp"

namespace exq {

// U*A*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

// Isomorphism type of a finitely generated abelian group:
// Z^free_rank + sum Z/d for d in invariant_factors (each > 1, d_i | d_{i+1}).
struct FinAbGroupStructure {
  int free_rank = 0;
  std::vector<Int> invariant_factors;

  Int torsion_order() const {
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
  }
  friend bool operator==(const FinAbGroupStructure& a, const FinAbGroupStructure& b) {
    return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
  }
};

namespace detail {

// Pivot rule: smallest absolute nonzero entry of the trailing submatrix,
// ties broken by row-major position.
inline bool find_pivot(const IntMatrix& b, int s, int& pi, int& pj) {
  bool found = false;
  Int best = 0;
  for (int i = s; i < b.rows; ++i)
    for (int j = s; j < b.cols; ++j) {
      const Int& v = b.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

inline void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
inline void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += q*row[b]
inline void add_row(IntMatrix& m, int a, int b, const Int& q) {
  for (int j = 0; j < m.cols; ++j) m.at(a, j) += q * m.at(b, j);
}
inline void add_col(IntMatrix& m, int a, int b, const Int& q) {
  for (int i = 0; i < m.rows; ++i) m.at(i, a) += q * m.at(i, b);
}
inline void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
  using namespace detail;
  IntMatrix B = A;
  IntMatrix U = IntMatrix::identity(A.rows);
  IntMatrix V = IntMatrix::identity(A.cols);
  const int n = std::min(A.rows, A.cols);

  for (int s = 0; s < n; ++s) {
    int pi = s, pj = s;
    if (!find_pivot(B, s, pi, pj)) break;
    swap_rows(B, s, pi);
    swap_rows(U, s, pi);
    swap_cols(B, s, pj);
    swap_cols(V, s, pj);

    for (;;) {
      // Clear column s below the pivot, refreshing the pivot whenever a
      // smaller remainder shows up.
      bool dirty = false;
      for (int i = s + 1; i < B.rows; ++i) {
        if (B.at(i, s) == 0) continue;
        Int q = B.at(i, s) / B.at(s, s);
        add_row(B, i, s, -q);
        add_row(U, i, s, -q);
        if (B.at(i, s) != 0) {
          swap_rows(B, s, i);
          swap_rows(U, s, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int j = s + 1; j < B.cols; ++j) {
        if (B.at(s, j) == 0) continue;
        Int q = B.at(s, j) / B.at(s, s);
        add_col(B, j, s, -q);
        add_col(V, j, s, -q);
        if (B.at(s, j) != 0) {
          swap_cols(B, s, j);
          swap_cols(V, s, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot is lone; enforce divisibility over the rest of the submatrix.
      bool fixed = true;
      for (int i = s + 1; i < B.rows && fixed; ++i)
        for (int j = s + 1; j < B.cols && fixed; ++j)
          if (B.at(i, j) % B.at(s, s) != 0) {
            add_row(B, s, i, 1);
            add_row(U, s, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (int s = 0; s < n; ++s)
    if (B.at(s, s) < 0) {
      detail::negate_row(B, s);
      detail::negate_row(U, s);
    }
  return SmithDecomposition{std::move(U), std::move(B), std::move(V)};
}

inline int rank(const SmithDecomposition& s) {
  int r = 0;
  const int n = std::min(s.D.rows, s.D.cols);
  for (int i = 0; i < n; ++i)
    if (s.D.at(i, i) != 0) ++r;
  return r;
}

// Structure of Z^rows / (column span of A).
inline FinAbGroupStructure cokernel_structure(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  FinAbGroupStructure g;
  g.free_rank = A.rows - rank(s);
  const int n = std::min(A.rows, A.cols);
  for (int i = 0; i < n; ++i)
    if (s.D.at(i, i) > 1) g.invariant_factors.push_back(s.D.at(i, i));
  return g;
}

// Basis of the saturated lattice {v : A v = 0}.
inline std::vector<std::vector<Int>> kernel_basis(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  const int n = std::min(A.rows, A.cols);
  std::vector<std::vector<Int>> basis;
  for (int k = 0; k < A.cols; ++k) {
    if (k < n && s.D.at(k, k) != 0) continue;
    std::vector<Int> v(A.cols);
    for (int i = 0; i < A.cols; ++i) v[i] = s.V.at(i, k);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a matrix with det = +-1; UAV = I gives A^{-1} = V U.
inline IntMatrix inverse_unimodular(const IntMatrix& A) {
  if (!A.square()) throw std::invalid_argument("inverse of non-square matrix");
  SmithDecomposition s = smith_normal_form(A);
  for (int i = 0; i < A.rows; ++i)
    if (s.D.at(i, i) != 1) throw std::invalid_argument("matrix is not unimodular");
  return s.V * s.U;
}

}  // namespace exq

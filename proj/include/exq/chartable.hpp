#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "exq/cyclotomic.hpp"
#include "exq/group.hpp"

namespace exq {

// Exact character table. Values live in Q(zeta_e) with e the group exponent.
// Row 0 is the trivial character; the remaining rows are sorted by degree,
// then by the canonical coordinate order of their value vectors.
struct CharTable {
  Int group_order = 1;
  ConjClassSet classes;
  std::vector<int> inverse_class;        // class of the inverses
  std::vector<int> class_element_order;  // order of a representative
  std::shared_ptr<CycField> field;
  std::vector<Int> degrees;
  std::vector<std::vector<CycField::Elt>> rows;  // rows[i][j] = chi_i(class j)

  int num_classes() const { return classes.count(); }
  int num_irreducibles() const { return static_cast<int>(rows.size()); }
};

namespace dixon {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t find_prime(std::uint64_t exponent, std::uint64_t group_order) {
  std::uint64_t lower = 1;
  while (lower * lower <= 4 * group_order) ++lower;  // lower > 2*sqrt(|G|)
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    if (p < lower) continue;
    if (!is_prime(p)) continue;
    if (group_order % p == 0) continue;
    return p;
  }
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// Kernel basis of a square matrix over F_p.
inline std::vector<Vec> kernel(Mat m, std::uint64_t p) {
  const int n = static_cast<int>(m.size());
  std::vector<int> pivot_col(n, -1);
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pr = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    std::uint64_t iv = mod_inv(m[r][c], p);
    for (int j = 0; j < n; ++j) m[r][j] = m[r][j] * iv % p;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    pivot_col[r] = c;
    ++r;
  }
  std::vector<char> is_pivot(n, 0);
  for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = 1;
  std::vector<Vec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = (p - m[i][c]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::uint64_t det_mod(Mat m, std::uint64_t p) {
  const int n = static_cast<int>(m.size());
  std::uint64_t d = 1;
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return 0;
    if (pr != c) {
      std::swap(m[pr], m[c]);
      d = p - d;
    }
    d = d * m[c][c] % p;
    std::uint64_t iv = mod_inv(m[c][c], p);
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      std::uint64_t f = m[i][c] * iv % p;
      for (int j = c; j < n; ++j) m[i][j] = (m[i][j] + (p - f) * m[c][j]) % p;
    }
  }
  return d % p;
}

}  // namespace dixon

// Burnside/Dixon: common eigenvectors of the class-sum matrices over a prime
// field F_p with p = 1 (mod exponent), lifted to exact cyclotomic values via
// the discrete Fourier inversion over each element order.
template <class Ops>
CharTable character_table(const FinGroup<Ops>& g) {
  using namespace dixon;
  CharTable table;
  table.group_order = g.size();
  table.classes = conjugacy_classes(g);
  const int k = table.classes.count();
  const int n = g.size();

  table.inverse_class.resize(k);
  table.class_element_order.resize(k);
  int exponent = 1;
  for (int j = 0; j < k; ++j) {
    int rep = table.classes.representatives[j];
    table.inverse_class[j] = table.classes.class_of[g.inv(rep)];
    table.class_element_order[j] = g.element_order(rep);
    exponent = static_cast<int>(lcm(Int(exponent), Int(table.class_element_order[j])).convert_to<long long>());
  }
  table.field = std::make_shared<CycField>(exponent);

  const std::uint64_t p = find_prime(exponent, n);
  const std::uint64_t z = primitive_root(p);

  // Class-sum structure constants: M_i[j][l] = #{x in C_i : x^{-1} z_l in C_j}.
  std::vector<Mat> cmats(k, Mat(k, Vec(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      int zl = table.classes.representatives[l];
      for (int x : table.classes.classes[i]) {
        int y = g.mult(g.inv(x), zl);
        cmats[i][table.classes.class_of[y]][l] += 1;
      }
    }

  // Split F_p^k into common eigenspaces.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int i = 0; i < k; ++i) {
      Vec e(k, 0);
      e[i] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (int i = 1; i < k; ++i) {
    bool all_done = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_done = false;
    if (all_done) break;
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      const int sd = static_cast<int>(s.size());
      if (sd == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction of M_i to the invariant subspace spanned by s.
      // Solve coords of M_i*b_r in the basis s by Gaussian elimination.
      Mat basis(sd, Vec(k));
      for (int r = 0; r < sd; ++r) basis[r] = s[r];
      Mat images(sd, Vec(k, 0));
      for (int r = 0; r < sd; ++r)
        for (int a = 0; a < k; ++a) {
          if (s[r][a] == 0) continue;
          for (int b = 0; b < k; ++b)
            images[r][b] = (images[r][b] + s[r][a] * cmats[i][b][a]) % p;
        }
      // Row-reduce the basis once, tracking the transform.
      Mat work = basis;
      Mat trans(sd, Vec(sd, 0));
      for (int r = 0; r < sd; ++r) trans[r][r] = 1;
      std::vector<int> pcols(sd, -1);
      int rr = 0;
      for (int c = 0; c < k && rr < sd; ++c) {
        int pr = -1;
        for (int i2 = rr; i2 < sd; ++i2)
          if (work[i2][c] != 0) {
            pr = i2;
            break;
          }
        if (pr < 0) continue;
        std::swap(work[pr], work[rr]);
        std::swap(trans[pr], trans[rr]);
        std::uint64_t iv = mod_inv(work[rr][c], p);
        for (int j = 0; j < k; ++j) work[rr][j] = work[rr][j] * iv % p;
        for (int j = 0; j < sd; ++j) trans[rr][j] = trans[rr][j] * iv % p;
        for (int i2 = 0; i2 < sd; ++i2) {
          if (i2 == rr || work[i2][c] == 0) continue;
          std::uint64_t f = work[i2][c];
          for (int j = 0; j < k; ++j) work[i2][j] = (work[i2][j] + (p - f) * work[rr][j]) % p;
          for (int j = 0; j < sd; ++j) trans[i2][j] = (trans[i2][j] + (p - f) * trans[rr][j]) % p;
        }
        pcols[rr] = c;
        ++rr;
      }
      if (rr != sd) throw std::logic_error("degenerate eigenspace basis");
      Mat restr(sd, Vec(sd, 0));  // coords of images in the basis
      for (int r = 0; r < sd; ++r) {
        Vec coords(sd, 0);
        Vec img = images[r];
        for (int t = 0; t < sd; ++t) {
          std::uint64_t c0 = img[pcols[t]];
          if (c0 == 0) continue;
          for (int j = 0; j < sd; ++j) coords[j] = (coords[j] + c0 * trans[t][j]) % p;
          for (int j = 0; j < k; ++j) img[j] = (img[j] + (p - c0) * work[t][j]) % p;
        }
        for (int j = 0; j < k; ++j)
          if (img[j] != 0) throw std::logic_error("class matrix does not preserve subspace");
        // coords expresses images[r] over the original basis rows s[j].
        for (int j = 0; j < sd; ++j) restr[r][j] = coords[j];
      }
      // restr currently maps basis-row r to coords; we need the matrix acting
      // on coordinate columns: R[c][r] with image_r = sum_c R[c][r] basis_c.
      Mat R(sd, Vec(sd, 0));
      for (int r = 0; r < sd; ++r)
        for (int c = 0; c < sd; ++c) R[c][r] = restr[r][c];
      // Eigenvalue scan.
      for (std::uint64_t lam = 0; lam < p; ++lam) {
        Mat shifted = R;
        for (int d0 = 0; d0 < sd; ++d0) shifted[d0][d0] = (shifted[d0][d0] + p - lam) % p;
        if (det_mod(shifted, p) != 0) continue;
        auto kern = kernel(shifted, p);
        if (kern.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& coeffs : kern) {
          Vec v(k, 0);
          for (int r = 0; r < sd; ++r) {
            if (coeffs[r] == 0) continue;
            for (int j = 0; j < k; ++j) v[j] = (v[j] + coeffs[r] * s[r][j]) % p;
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
    int total = 0;
    for (const auto& s : spaces) total += static_cast<int>(s.size());
    if (total != k) throw std::logic_error("eigenspace split lost dimensions");
  }
  for (const auto& s : spaces)
    if (s.size() != 1) throw std::logic_error("class matrices failed to separate characters");

  // Each eigenvector w_j = |C_j| chi(g_j) / chi(1) after normalizing w_0 = 1.
  std::vector<Int> sizes_int(k);
  Vec sizes_mod(k), sizes_inv(k);
  for (int j = 0; j < k; ++j) {
    sizes_int[j] = static_cast<long long>(table.classes.classes[j].size());
    sizes_mod[j] = table.classes.classes[j].size() % p;
    sizes_inv[j] = mod_inv(sizes_mod[j], p);
  }

  struct RawRow {
    Int degree;
    std::vector<CycField::Elt> values;
  };
  std::vector<RawRow> raw;

  // Power map: class of rep_j^s.
  std::vector<std::vector<int>> power_class(k);
  for (int j = 0; j < k; ++j) {
    int m = table.class_element_order[j];
    power_class[j].resize(m);
    int cur = 0;
    int rep = table.classes.representatives[j];
    for (int s = 0; s < m; ++s) {
      power_class[j][s] = table.classes.class_of[cur];
      cur = g.mult(cur, rep);
    }
  }

  const CycField& F = *table.field;
  for (const auto& sp : spaces) {
    Vec w = sp[0];
    if (w[0] == 0) throw std::logic_error("eigenvector vanishes on the identity class");
    std::uint64_t norm = mod_inv(w[0], p);
    for (int j = 0; j < k; ++j) w[j] = w[j] * norm % p;
    // |G| / chi(1)^2 = sum_j w_j w_{j*} / |C_j|
    std::uint64_t ssum = 0;
    for (int j = 0; j < k; ++j) ssum = (ssum + w[j] * w[table.inverse_class[j]] % p * sizes_inv[j]) % p;
    std::uint64_t d2 = static_cast<std::uint64_t>(n % static_cast<int>(p)) * mod_inv(ssum, p) % p;
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; 2 * d < p; ++d)
      if (d * d % p == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("character degree not recovered");
    Vec chi(k);
    for (int j = 0; j < k; ++j) chi[j] = deg * w[j] % p * sizes_inv[j] % p;

    RawRow row;
    row.degree = static_cast<long long>(deg);
    row.values.resize(k);
    for (int j = 0; j < k; ++j) {
      const int m = table.class_element_order[j];
      const std::uint64_t zeta_m = mod_pow(z, (p - 1) / m, p);
      const std::uint64_t zeta_m_inv = mod_inv(zeta_m, p);
      const std::uint64_t m_inv = mod_inv(m % p, p);
      CycField::Elt val = F.zero();
      std::uint64_t total = 0;
      for (int t = 0; t < m; ++t) {
        std::uint64_t nt = 0;
        for (int s = 0; s < m; ++s) {
          std::uint64_t term = chi[power_class[j][s]] * mod_pow(zeta_m_inv, static_cast<std::uint64_t>(t) * s % (p - 1), p) % p;
          nt = (nt + term) % p;
        }
        nt = nt * m_inv % p;
        total += nt;
        if (nt != 0)
          val = F.add(val, F.scale(F.root_power(Int(t) * (exponent / m)), Rat(static_cast<long long>(nt))));
      }
      // The n_t are eigenvalue multiplicities of a degree-deg matrix, so they
      // must sum to the degree exactly.
      if (Int(total) != row.degree) throw std::logic_error("cyclotomic lift inconsistent");
      row.values[j] = std::move(val);
    }
    raw.push_back(std::move(row));
  }

  // Canonical order: trivial character first, then by degree, then by the
  // coordinate order of the value vectors.
  auto is_trivial = [&](const RawRow& r) {
    for (const auto& v : r.values)
      if (!F.is_rational(v, Rat(1))) return false;
    return true;
  };
  std::stable_sort(raw.begin(), raw.end(), [&](const RawRow& a, const RawRow& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int j = 0; j < k; ++j) {
      int c = CycField::compare(a.values[j], b.values[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  Int sum_sq = 0;
  for (const auto& r : raw) sum_sq += r.degree * r.degree;
  if (sum_sq != table.group_order) throw std::logic_error("degree check failed in character table");

  for (auto& r : raw) {
    table.degrees.push_back(r.degree);
    table.rows.push_back(std::move(r.values));
  }
  return table;
}

// Exact verification of both orthogonality relations; used by tests and as
// an oracle against the Dixon path.
inline bool verify_char_table(const CharTable& t) {
  const CycField& F = *t.field;
  const int k = t.num_classes();
  if (t.num_irreducibles() != k) return false;
  Int order = t.group_order;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      CycField::Elt s = F.zero();
      for (int j = 0; j < k; ++j) {
        CycField::Elt term = F.mul(t.rows[a][j], F.conj(t.rows[b][j]));
        s = F.add(s, F.scale(term, Rat(static_cast<long long>(t.classes.classes[j].size()))));
      }
      if (a == b ? !F.is_rational(s, Rat(order)) : !F.is_zero(s)) return false;
    }
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l) {
      CycField::Elt s = F.zero();
      for (int a = 0; a < k; ++a) s = F.add(s, F.mul(t.rows[a][j], F.conj(t.rows[a][l])));
      Rat expect = j == l ? Rat(order) / Rat(Int(t.classes.classes[j].size())) : Rat(0);
      if (!F.is_rational(s, expect)) return false;
    }
  return true;
}

}  // namespace exq

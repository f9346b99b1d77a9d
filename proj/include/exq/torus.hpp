#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "exq/numeric.hpp"
#include "exq/smith.hpp"

namespace exq {

// One coordinate of a torus point: the complex number mag * e^{2*pi*i*angle},
// with mag a positive rational and angle rational in [0,1). This subgroup of
// C^* is closed under integer monomial maps and has decidable equality.
struct TorusCoord {
  Rat mag{1};
  Rat angle{0};

  TorusCoord() = default;
  TorusCoord(Rat m, Rat a) : mag(std::move(m)), angle(mod1(a)) {
    if (mag <= 0) throw std::invalid_argument("torus coordinate magnitude must be positive");
  }

  bool is_one() const { return mag == 1 && angle == 0; }

  TorusCoord pow(const Int& k) const { return TorusCoord(exq::pow(mag, k), mod1(angle * Rat(k))); }

  friend TorusCoord operator*(const TorusCoord& a, const TorusCoord& b) {
    return TorusCoord(a.mag * b.mag, mod1(a.angle + b.angle));
  }
  friend bool operator==(const TorusCoord& a, const TorusCoord& b) {
    return a.mag == b.mag && a.angle == b.angle;
  }
  friend bool operator!=(const TorusCoord& a, const TorusCoord& b) { return !(a == b); }
  friend bool operator<(const TorusCoord& a, const TorusCoord& b) {
    if (a.mag != b.mag) return a.mag < b.mag;
    return a.angle < b.angle;
  }

  static TorusCoord one() { return TorusCoord(); }
  static TorusCoord root_of_unity(const Int& numer, const Int& denom) {
    return TorusCoord(Rat(1), mod1(Rat(numer, denom)));
  }
};

struct TorusPoint {
  std::vector<TorusCoord> coords;

  TorusPoint() = default;
  explicit TorusPoint(std::vector<TorusCoord> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_identity() const {
    for (const auto& c : coords)
      if (!c.is_one()) return false;
    return true;
  }

  static TorusPoint one(int n) { return TorusPoint(std::vector<TorusCoord>(n)); }

  TorusPoint pow(const Int& k) const {
    TorusPoint out = *this;
    for (auto& c : out.coords) c = c.pow(k);
    return out;
  }

  friend TorusPoint operator*(const TorusPoint& a, const TorusPoint& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("torus point rank mismatch");
    TorusPoint out = a;
    for (int i = 0; i < out.rank(); ++i) out.coords[i] = out.coords[i] * b.coords[i];
    return out;
  }
  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords == b.coords; }
  friend bool operator!=(const TorusPoint& a, const TorusPoint& b) { return !(a == b); }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    for (int i = 0; i < a.rank(); ++i) {
      if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
    }
    return false;
  }

  // Value of the character with exponent vector x: prod_j coords[j]^{x_j}.
  TorusCoord eval_character(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != rank()) throw std::invalid_argument("character rank mismatch");
    TorusCoord v = TorusCoord::one();
    for (int j = 0; j < rank(); ++j) {
      if (x[j] == 0) continue;
      v = v * coords[j].pow(x[j]);
    }
    return v;
  }
};

// Monomial automorphism of the torus: (w.t)_i = prod_j t_j^{m_ij}.
struct MonomialAction {
  IntMatrix matrix;

  explicit MonomialAction(IntMatrix m) : matrix(std::move(m)) {
    if (!matrix.square()) throw std::invalid_argument("monomial action matrix must be square");
    Int d = matrix.det();
    if (d != 1 && d != -1) throw std::invalid_argument("monomial action matrix must be unimodular");
  }

  int rank() const { return matrix.rows; }
};

inline TorusPoint act(const MonomialAction& a, const TorusPoint& t) {
  if (a.rank() != t.rank()) throw std::invalid_argument("monomial action rank mismatch");
  std::vector<TorusCoord> out(t.rank());
  for (int i = 0; i < a.rank(); ++i) {
    TorusCoord v = TorusCoord::one();
    for (int j = 0; j < a.rank(); ++j) {
      const Int& e = a.matrix.at(i, j);
      if (e == 0) continue;
      v = v * t.coords[j].pow(e);
    }
    out[i] = v;
  }
  return TorusPoint(std::move(out));
}

inline bool is_fixed(const MonomialAction& a, const TorusPoint& t) { return act(a, t) == t; }

struct FixedLocus {
  int dimension = 0;
  Int component_count = 1;
  FinAbGroupStructure structure;
  std::vector<TorusPoint> sample_points;  // one per component, deterministic order
};

// Joint fixed locus of monomial actions. The conditions t^{M-I} = 1 say that
// t, as a character of Z^n, kills the lattice L spanned by the rows of all
// the matrices M - I; the locus is Hom(Z^n / L, C^*). A Smith form
// U B V = D of the concatenated (M-I)^T exhibits the adapted basis
// u_k = columns of U^{-1}: membership reads t(u_k)^{d_k} = 1, the identity
// component is cut out by the d_k = 0 directions, and the torsion residues
// on the d_k > 1 directions enumerate the connected components.
class FixedLocusBuilder {
 public:
  explicit FixedLocusBuilder(const std::vector<IntMatrix>& actions) {
    if (actions.empty()) throw std::invalid_argument("no actions given");
    n_ = actions.front().rows;
    for (const auto& m : actions)
      if (!m.square() || m.rows != n_) throw std::invalid_argument("action dimension mismatch");
    IntMatrix B(n_, n_ * static_cast<int>(actions.size()));
    for (std::size_t a = 0; a < actions.size(); ++a) {
      IntMatrix At = (actions[a] - IntMatrix::identity(n_)).transpose();
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) B.at(i, static_cast<int>(a) * n_ + j) = At.at(i, j);
    }
    SmithDecomposition s = smith_normal_form(B);
    u_ = s.U;
    uinv_ = inverse_unimodular(u_);
    orders_.assign(n_, Int(0));
    const int m = std::min(B.rows, B.cols);
    for (int k = 0; k < m; ++k) orders_[k] = s.D.at(k, k);
    for (int k = 0; k < n_; ++k) {
      if (orders_[k] == 0)
        free_idx_.push_back(k);
      else if (orders_[k] > 1)
        torsion_idx_.push_back(k);
    }
  }

  int rank() const { return n_; }
  int dimension() const { return static_cast<int>(free_idx_.size()); }
  int torsion_directions() const { return static_cast<int>(torsion_idx_.size()); }

  FinAbGroupStructure structure() const {
    FinAbGroupStructure g;
    g.free_rank = dimension();
    for (int k : torsion_idx_) g.invariant_factors.push_back(orders_[k]);
    return g;
  }

  Int component_count() const { return structure().torsion_order(); }

  // Point with torsion residues a_k (one per torsion direction) and given
  // values on the free directions: t_j = prod_k s_k^{U_{kj}}.
  TorusPoint point(const std::vector<Int>& torsion, const std::vector<TorusCoord>& free) const {
    if (torsion.size() != torsion_idx_.size()) throw std::invalid_argument("bad torsion tuple size");
    if (free.size() != free_idx_.size()) throw std::invalid_argument("bad free tuple size");
    std::vector<TorusCoord> svals(n_);
    for (std::size_t i = 0; i < torsion_idx_.size(); ++i)
      svals[torsion_idx_[i]] = TorusCoord::root_of_unity(torsion[i], orders_[torsion_idx_[i]]);
    for (std::size_t i = 0; i < free_idx_.size(); ++i) svals[free_idx_[i]] = free[i];
    std::vector<TorusCoord> out(n_);
    for (int j = 0; j < n_; ++j) {
      TorusCoord v = TorusCoord::one();
      for (int k = 0; k < n_; ++k) {
        if (svals[k].is_one()) continue;
        const Int& e = u_.at(k, j);
        if (e == 0) continue;
        v = v * svals[k].pow(e);
      }
      out[j] = v;
    }
    return TorusPoint(std::move(out));
  }

  // Torsion residues of a point on the locus; identifies its component.
  std::vector<Int> component_id(const TorusPoint& t) const {
    std::vector<Int> id;
    id.reserve(torsion_idx_.size());
    for (int k : torsion_idx_) {
      std::vector<Int> uk(n_);
      for (int j = 0; j < n_; ++j) uk[j] = uinv_.at(j, k);
      TorusCoord v = t.eval_character(uk);
      const Int d = orders_[k];
      Rat a = v.angle * Rat(d);
      if (v.mag != 1 || den(a) != 1) throw std::invalid_argument("point does not lie on the locus");
      id.push_back(num(a));
    }
    return id;
  }

  // All torsion tuples in mixed-radix lexicographic order.
  std::vector<std::vector<Int>> all_components() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(torsion_idx_.size(), Int(0));
    for (;;) {
      out.push_back(cur);
      int pos = static_cast<int>(cur.size()) - 1;
      while (pos >= 0) {
        cur[pos] += 1;
        if (cur[pos] < orders_[torsion_idx_[pos]]) break;
        cur[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    return out;
  }

  std::vector<TorusCoord> unit_free_values() const {
    return std::vector<TorusCoord>(free_idx_.size());
  }

  // Multiplicatively independent magnitudes on the free directions make the
  // sample exactly as generic as its component: any monomial action fixing
  // it fixes the whole component pointwise.
  std::vector<TorusCoord> generic_free_values() const {
    static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<TorusCoord> out;
    for (std::size_t i = 0; i < free_idx_.size(); ++i)
      out.emplace_back(Rat(primes[i % 12]), Rat(0));
    return out;
  }

 private:
  int n_ = 0;
  IntMatrix u_;
  IntMatrix uinv_;
  std::vector<Int> orders_;
  std::vector<int> torsion_idx_;
  std::vector<int> free_idx_;
};

inline FixedLocus fixed_locus(const MonomialAction& a) {
  FixedLocusBuilder b({a.matrix});
  FixedLocus out;
  out.dimension = b.dimension();
  out.structure = b.structure();
  out.component_count = b.component_count();
  for (const auto& comp : b.all_components())
    out.sample_points.push_back(b.point(comp, b.unit_free_values()));
  return out;
}

}  // namespace exq

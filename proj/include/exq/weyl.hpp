#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exq/group.hpp"
#include "exq/rootdata.hpp"
#include "exq/torus.hpp"

namespace exq {

// Weyl elements are stored as matrices on X(T); torus coordinates transform
// like cocharacters, so the monomial matrix of w on T is the transpose of
// the matrix of w^{-1} on X(T). Caching these per element keeps stabilizer
// sweeps cheap.
class TorusActionCache {
 public:
  explicit TorusActionCache(const MatGroup& w) : w_(&w) {
    mats_.reserve(w.size());
    for (int i = 0; i < w.size(); ++i) mats_.emplace_back(w.elem(w.inv(i)).transpose());
  }

  const MatGroup& group() const { return *w_; }
  const IntMatrix& torus_matrix(int i) const { return mats_[i].matrix; }
  TorusPoint apply(int i, const TorusPoint& t) const { return act(mats_[i], t); }
  bool fixes(int i, const TorusPoint& t) const { return apply(i, t) == t; }

  // Least point of the orbit W.t in coordinate order.
  TorusPoint canonical_orbit_representative(const TorusPoint& t) const {
    TorusPoint best = t;
    for (int i = 1; i < w_->size(); ++i) {
      TorusPoint cand = apply(i, t);
      if (cand < best) best = cand;
    }
    return best;
  }

  std::vector<int> stabilizer_indices(const TorusPoint& t) const {
    std::vector<int> out;
    for (int i = 0; i < w_->size(); ++i)
      if (fixes(i, t)) out.push_back(i);
    return out;
  }

 private:
  const MatGroup* w_;
  std::vector<MonomialAction> mats_;
};

inline MatGroup stabilizer_of_point(const MatGroup& w, const TorusPoint& t) {
  TorusActionCache cache(w);
  return w.subgroup(cache.stabilizer_indices(t));
}

// Restriction-to-units data of the inducing character: the finite subgroup
// im(chi-hat) of T given by generators of finite order.
struct InertialDatum {
  std::vector<TorusPoint> generators;

  void validate(int rank) const {
    for (const auto& g : generators) {
      if (g.rank() != rank) throw std::invalid_argument("inertial generator rank mismatch");
      for (const auto& c : g.coords)
        if (c.mag != 1) throw std::invalid_argument("inertial generators must have finite order");
    }
  }
  bool is_trivial() const {
    for (const auto& g : generators)
      if (!g.is_identity()) return false;
    return true;
  }
};

enum class WsMode { roots, stabilizer };

struct WsResult {
  std::vector<int> rs_roots;  // indices into the ambient datum's root list
  RootDatum h_datum;          // ambient lattice with roots restricted to R^s
  std::vector<int> w_indices; // W^s as element indices of the ambient group
  MatGroup ws;                // W^s re-closed on its own
};

// W^s from the inertial datum. "roots" builds the reflection group of
// R^s = {alpha : alpha(im chi-hat) = 1}, the Weyl group of C_G(im chi-hat)^0;
// "stabilizer" takes the full pointwise stabilizer of im(chi-hat) in W,
// which also covers the disconnected-centre cases. Inertial equivalence
// (twisting by unramified characters) never moves the restriction to units,
// so pointwise fixing of the generators is the right test in both modes.
inline WsResult compute_Ws(const RootDatum& rd, const MatGroup& w, const InertialDatum& inert,
                           WsMode mode) {
  inert.validate(rd.rank);
  std::vector<int> rs_roots;
  for (int i = 0; i < rd.num_roots(); ++i) {
    bool vanishes = true;
    for (const auto& g : inert.generators)
      if (!g.eval_character(rd.roots[i]).is_one()) {
        vanishes = false;
        break;
      }
    if (vanishes) rs_roots.push_back(i);
  }

  RootDatum h;
  h.rank = rd.rank;
  h.name = rd.name + "^s";
  std::vector<int> new_index(rd.num_roots(), -1);
  for (int i : rs_roots) {
    new_index[i] = static_cast<int>(h.roots.size());
    h.roots.push_back(rd.roots[i]);
    h.coroots.push_back(rd.coroots[i]);
  }
  // Simple system of R^s: positive roots not expressible as a sum of two
  // positive roots of R^s.
  for (int i : rs_roots) {
    if (!rd.is_positive_root(i)) continue;
    bool decomposable = false;
    for (int a : rs_roots) {
      if (decomposable) break;
      if (!rd.is_positive_root(a)) continue;
      for (int b : rs_roots) {
        if (!rd.is_positive_root(b)) continue;
        std::vector<Int> sum = rd.roots[a];
        for (int k = 0; k < rd.rank; ++k) sum[k] += rd.roots[b][k];
        if (sum == rd.roots[i]) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) h.simple.push_back(new_index[i]);
  }

  std::vector<int> w_indices;
  if (mode == WsMode::roots) {
    std::vector<IntMatrix> gens;
    for (int i : rs_roots) gens.push_back(rd.reflection(i));
    MatGroup ws(std::move(gens), MatOps(rd.rank));
    for (int i = 0; i < ws.size(); ++i) w_indices.push_back(w.index_of(ws.elem(i)));
    std::sort(w_indices.begin(), w_indices.end());
    return WsResult{std::move(rs_roots), std::move(h), std::move(w_indices), std::move(ws)};
  }
  TorusActionCache cache(w);
  for (int i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (const auto& g : inert.generators)
      if (!cache.fixes(i, g)) {
        ok = false;
        break;
      }
    if (ok) w_indices.push_back(i);
  }
  MatGroup ws = w.subgroup(w_indices);
  return WsResult{std::move(rs_roots), std::move(h), std::move(w_indices), std::move(ws)};
}

// Stabilizer decomposition W_t = W_M0 x| pi0 where W_M0 is generated by the
// reflections of roots vanishing at t and pi0 is the subgroup preserving
// the positive system of the vanishing subsystem.
struct StabilizerDecomposition {
  MatGroup w_t;
  std::vector<int> w_m0;                        // element indices within w_t
  std::vector<int> pi0;                         // element indices within w_t
  std::vector<std::pair<int, int>> witness;     // element i of w_t = w_m0[m] * pi0[p]
  std::vector<int> vanishing_roots;             // indices into the datum's roots

  int wt_order() const { return w_t.size(); }
  int wm0_order() const { return static_cast<int>(w_m0.size()); }
  int pi0_order() const { return static_cast<int>(pi0.size()); }
};

inline StabilizerDecomposition levi_decompose(const RootDatum& h_datum, const MatGroup& ws,
                                              const TorusPoint& t) {
  StabilizerDecomposition out{stabilizer_of_point(ws, t), {}, {}, {}, {}};
  const MatGroup& wt = out.w_t;

  for (int i = 0; i < h_datum.num_roots(); ++i)
    if (t.eval_character(h_datum.roots[i]).is_one()) out.vanishing_roots.push_back(i);

  // W_M0 = < s_alpha : alpha(t) = 1 >, closed within W_t.
  std::vector<int> refl;
  for (int i : out.vanishing_roots) refl.push_back(wt.index_of(h_datum.reflection(i)));
  std::sort(refl.begin(), refl.end());
  refl.erase(std::unique(refl.begin(), refl.end()), refl.end());
  {
    std::vector<char> in_m0(wt.size(), 0);
    std::vector<int> queue{0};
    in_m0[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int r : refl) {
        int nxt = wt.mult(queue[head], r);
        if (!in_m0[nxt]) {
          in_m0[nxt] = 1;
          queue.push_back(nxt);
        }
      }
    for (int i = 0; i < wt.size(); ++i)
      if (in_m0[i]) out.w_m0.push_back(i);
  }

  // pi0 = elements of W_t preserving the positive vanishing roots setwise
  // (the stabilizer of the Borel of M^0 in the proof of the decomposition).
  std::vector<std::vector<Int>> pos_vanishing;
  for (int i : out.vanishing_roots)
    if (h_datum.is_positive_root(i)) pos_vanishing.push_back(h_datum.roots[i]);
  for (int i = 0; i < wt.size(); ++i) {
    const IntMatrix& m = wt.elem(i);
    bool preserves = true;
    for (const auto& r : pos_vanishing) {
      std::vector<Int> img = m.apply(r);
      if (std::find(pos_vanishing.begin(), pos_vanishing.end(), img) == pos_vanishing.end()) {
        preserves = false;
        break;
      }
    }
    if (preserves) out.pi0.push_back(i);
  }

  // Unique factorization w = m * p.
  std::vector<int> m0_pos(wt.size(), -1), p_pos(wt.size(), -1);
  for (std::size_t k = 0; k < out.w_m0.size(); ++k) m0_pos[out.w_m0[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < out.pi0.size(); ++k) p_pos[out.pi0[k]] = static_cast<int>(k);
  out.witness.resize(wt.size(), {-1, -1});
  for (int i = 0; i < wt.size(); ++i) {
    int found = 0;
    for (int p : out.pi0) {
      int m = wt.mult(i, wt.inv(p));
      if (m0_pos[m] >= 0) {
        ++found;
        out.witness[i] = {m0_pos[m], p_pos[p]};
      }
    }
    if (found != 1) throw std::logic_error("stabilizer decomposition is not a semidirect product");
  }
  if (out.w_m0.size() * out.pi0.size() != static_cast<std::size_t>(wt.size()))
    throw std::logic_error("stabilizer decomposition order mismatch");
  return out;
}

}  // namespace exq

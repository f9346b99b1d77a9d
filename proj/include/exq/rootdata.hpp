#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "exq/group.hpp"
#include "exq/intmat.hpp"

namespace exq {

// Root datum (X(T), R, X_*(T), R^vee) with roots written in a basis of the
// character lattice and coroots in the dual basis. Roots come in +- pairs;
// a root counts as positive when its first nonzero coordinate is positive,
// which is the usual sign convention for all built-in bases.
struct RootDatum {
  int rank = 0;
  std::vector<std::vector<Int>> roots;
  std::vector<std::vector<Int>> coroots;  // paired with roots by index
  std::vector<int> simple;                // indices into roots
  std::string name;

  int num_roots() const { return static_cast<int>(roots.size()); }

  static Int pairing(const std::vector<Int>& x, const std::vector<Int>& cv) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * cv[i];
    return s;
  }

  bool is_positive_root(int i) const {
    for (const Int& c : roots[i]) {
      if (c > 0) return true;
      if (c < 0) return false;
    }
    return false;
  }

  // Reflection s_alpha : x -> x - <x, alpha^vee> alpha on X(T).
  IntMatrix reflection(int root_index) const {
    const auto& a = roots[root_index];
    const auto& av = coroots[root_index];
    IntMatrix s = IntMatrix::identity(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s.at(i, j) -= a[i] * av[j];
    return s;
  }

  int root_index(const std::vector<Int>& v) const {
    for (int i = 0; i < num_roots(); ++i)
      if (roots[i] == v) return i;
    return -1;
  }

  void validate() const {
    if (roots.size() != coroots.size()) throw std::invalid_argument("roots and coroots must be paired");
    for (int i = 0; i < num_roots(); ++i) {
      if (static_cast<int>(roots[i].size()) != rank || static_cast<int>(coroots[i].size()) != rank)
        throw std::invalid_argument("root vector of wrong rank");
      if (pairing(roots[i], coroots[i]) != 2)
        throw std::invalid_argument("<alpha, alpha^vee> must equal 2");
    }
    for (int i : simple)
      if (i < 0 || i >= num_roots()) throw std::invalid_argument("bad simple root index");
    // Every reflection must permute the root set.
    for (int i = 0; i < num_roots(); ++i) {
      IntMatrix s = reflection(i);
      for (int j = 0; j < num_roots(); ++j)
        if (root_index(s.apply(roots[j])) < 0)
          throw std::invalid_argument("reflections do not preserve the root set");
    }
  }
};

// GL(n): X = Z^n, roots e_i - e_j, coroots the same vectors.
inline RootDatum gl_datum(int n) {
  if (n < 1) throw std::invalid_argument("gl datum needs n >= 1");
  RootDatum rd;
  rd.rank = n;
  rd.name = "gl" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Int> v(n, Int(0));
      v[i] = 1;
      v[j] = -1;
      rd.roots.push_back(v);
      rd.coroots.push_back(v);
    }
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Int> v(n, Int(0));
    v[i] = 1;
    v[i + 1] = -1;
    rd.simple.push_back(rd.root_index(v));
  }
  return rd;
}

// PGL(n): X = the A_{n-1} root lattice in the simple-root basis. This is the
// torus of the Langlands dual of SL(n).
inline RootDatum pgl_datum(int n) {
  if (n < 2) throw std::invalid_argument("pgl datum needs n >= 2");
  const int r = n - 1;
  RootDatum rd;
  rd.rank = r;
  rd.name = "pgl" + std::to_string(n);
  // Roots e_i - e_j expressed as sums of consecutive simple roots; the
  // coroot of alpha_i in the dual basis is the i-th row of the Cartan matrix.
  auto cartan_row = [&](int i) {
    std::vector<Int> v(r, Int(0));
    v[i] = 2;
    if (i > 0) v[i - 1] = -1;
    if (i + 1 < r) v[i + 1] = -1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Int> root(r, Int(0)), coroot(r, Int(0));
      int lo = std::min(i, j), hi = std::max(i, j);
      Int sign = i < j ? 1 : -1;
      for (int k = lo; k < hi; ++k) {
        root[k] += sign;
        auto cr = cartan_row(k);
        for (int m = 0; m < r; ++m) coroot[m] += sign * cr[m];
      }
      rd.roots.push_back(root);
      rd.coroots.push_back(coroot);
    }
  for (int i = 0; i < r; ++i) {
    std::vector<Int> v(r, Int(0));
    v[i] = 1;
    rd.simple.push_back(rd.root_index(v));
  }
  return rd;
}

// B2 = SO(5): X = Z^2 with short roots +-e_i and long roots +-e_1 +- e_2.
inline RootDatum b2_datum() {
  RootDatum rd;
  rd.rank = 2;
  rd.name = "b2";
  auto add = [&](long long a, long long b, long long ca, long long cb) {
    rd.roots.push_back({Int(a), Int(b)});
    rd.coroots.push_back({Int(ca), Int(cb)});
  };
  add(1, -1, 1, -1);   // long
  add(-1, 1, -1, 1);
  add(1, 1, 1, 1);
  add(-1, -1, -1, -1);
  add(1, 0, 2, 0);     // short
  add(-1, 0, -2, 0);
  add(0, 1, 0, 2);
  add(0, -1, 0, -2);
  rd.simple = {0, 6};  // e1 - e2, e2
  return rd;
}

// G2 in the simple-root basis, alpha1 short, alpha2 long.
inline RootDatum g2_datum() {
  RootDatum rd;
  rd.rank = 2;
  rd.name = "g2";
  // (root, coroot) pairs; coroots computed from the invariant form with
  // (a1,a1) = 2, (a2,a2) = 6, (a1,a2) = -3.
  auto add = [&](long long a, long long b, long long ca, long long cb) {
    rd.roots.push_back({Int(a), Int(b)});
    rd.coroots.push_back({Int(ca), Int(cb)});
    rd.roots.push_back({Int(-a), Int(-b)});
    rd.coroots.push_back({Int(-ca), Int(-cb)});
  };
  add(1, 0, 2, -3);   // alpha1 (short)
  add(0, 1, -1, 2);   // alpha2 (long)
  add(1, 1, -1, 3);   // short
  add(2, 1, 1, 0);    // short (highest short)
  add(3, 1, 1, -1);   // long
  add(3, 2, 0, 1);    // long (highest)
  rd.simple = {0, 2};
  return rd;
}

inline MatGroup weyl_group(const RootDatum& rd, std::size_t bound = kDefaultGroupBound) {
  std::vector<IntMatrix> gens;
  for (int i : rd.simple) gens.push_back(rd.reflection(i));
  return MatGroup(std::move(gens), MatOps(rd.rank), bound);
}

// Irreducible component of a root subsystem, with a chain-ordered simple
// system when the component has type A.
struct SubsystemComponent {
  enum class Kind { type_a, b2, g2, other };
  Kind kind = Kind::other;
  std::vector<int> roots;     // all roots of the component (indices into the datum)
  std::vector<int> positive;  // the positive ones
  std::vector<int> simple;    // simple system; for type A ordered along the chain
};

// Decompose the root subsystem spanned by the given (closed) root index set
// into irreducible components.
inline std::vector<SubsystemComponent> decompose_subsystem(const RootDatum& rd,
                                                           const std::vector<int>& root_indices) {
  std::vector<int> pos;
  for (int i : root_indices)
    if (rd.is_positive_root(i)) pos.push_back(i);
  std::sort(pos.begin(), pos.end());

  // Simple roots of the subsystem: positive roots that are not the sum of
  // two positive subsystem roots.
  std::vector<int> sub_simple;
  for (int i : pos) {
    bool decomposable = false;
    for (int a : pos) {
      if (decomposable) break;
      for (int b : pos) {
        std::vector<Int> sum = rd.roots[a];
        for (int k = 0; k < rd.rank; ++k) sum[k] += rd.roots[b][k];
        if (sum == rd.roots[i]) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) sub_simple.push_back(i);
  }

  // Components: connected pieces of the Dynkin graph on sub_simple.
  std::vector<int> comp_of(sub_simple.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < sub_simple.size(); ++i) {
    if (comp_of[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp_of[i] = ncomp;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < sub_simple.size(); ++j) {
        if (comp_of[j] >= 0) continue;
        if (RootDatum::pairing(rd.roots[sub_simple[cur]], rd.coroots[sub_simple[j]]) != 0) {
          comp_of[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }

  std::vector<SubsystemComponent> out(ncomp);
  for (std::size_t i = 0; i < sub_simple.size(); ++i) out[comp_of[i]].simple.push_back(sub_simple[i]);
  for (auto& comp : out) {
    // Attach each subsystem root to the component its simple support lies in.
    for (int i : root_indices) {
      // i belongs to comp iff it pairs nontrivially only with comp's simples
      // (components are mutually orthogonal).
      bool touches = false;
      for (int s : comp.simple)
        if (RootDatum::pairing(rd.roots[i], rd.coroots[s]) != 0 ||
            RootDatum::pairing(rd.roots[s], rd.coroots[i]) != 0) {
          touches = true;
          break;
        }
      if (touches) {
        comp.roots.push_back(i);
        if (rd.is_positive_root(i)) comp.positive.push_back(i);
      }
    }
    std::sort(comp.roots.begin(), comp.roots.end());
    std::sort(comp.positive.begin(), comp.positive.end());

    // Type detection.
    const int r = static_cast<int>(comp.simple.size());
    bool simply_laced_path = true;
    std::vector<std::vector<int>> adj(r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        if (a == b) continue;
        Int p = RootDatum::pairing(rd.roots[comp.simple[a]], rd.coroots[comp.simple[b]]);
        Int q = RootDatum::pairing(rd.roots[comp.simple[b]], rd.coroots[comp.simple[a]]);
        if (p != 0) adj[a].push_back(b);
        if (p * q > 1) simply_laced_path = false;  // multiple bond
      }
    for (int a = 0; a < r && simply_laced_path; ++a)
      if (adj[a].size() > 2) simply_laced_path = false;
    int expected_a_roots = r * (r + 1);
    if (simply_laced_path && static_cast<int>(comp.roots.size()) == expected_a_roots) {
      comp.kind = SubsystemComponent::Kind::type_a;
      // Order the simples along the chain, starting from the endpoint with
      // the lexicographically least root vector.
      std::vector<int> order;
      if (r == 1) {
        order = {0};
      } else {
        std::vector<int> ends;
        for (int a = 0; a < r; ++a)
          if (adj[a].size() == 1) ends.push_back(a);
        if (ends.size() != 2) {
          comp.kind = SubsystemComponent::Kind::other;
        } else {
          int start = ends[0];
          if (rd.roots[comp.simple[ends[1]]] < rd.roots[comp.simple[ends[0]]]) start = ends[1];
          std::vector<char> used(r, 0);
          order.push_back(start);
          used[start] = 1;
          while (static_cast<int>(order.size()) < r) {
            int cur = order.back();
            bool advanced = false;
            for (int nxt : adj[cur])
              if (!used[nxt]) {
                order.push_back(nxt);
                used[nxt] = 1;
                advanced = true;
                break;
              }
            if (!advanced) {
              comp.kind = SubsystemComponent::Kind::other;
              break;
            }
          }
        }
      }
      if (comp.kind == SubsystemComponent::Kind::type_a) {
        std::vector<int> chain;
        for (int o : order) chain.push_back(comp.simple[o]);
        comp.simple = chain;
      }
    } else if (r == 2 && comp.roots.size() == 8) {
      comp.kind = SubsystemComponent::Kind::b2;
    } else if (r == 2 && comp.roots.size() == 12) {
      comp.kind = SubsystemComponent::Kind::g2;
    }
  }
  return out;
}

}  // namespace exq

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "exq/intmat.hpp"
#include "exq/smith.hpp"

namespace exq {

constexpr std::size_t kDefaultGroupBound = 1000000;

struct GroupBoundExceeded : std::runtime_error {
  explicit GroupBoundExceeded(std::size_t bound)
      : std::runtime_error("group closure exceeds bound of " + std::to_string(bound) + " elements") {}
};

// Finite group as the closed element set generated from a seed, in
// breadth-first order from the identity with fixed generator order.
// Element semantics are supplied by an Ops policy (matrices, permutations,
// semidirect pairs).
template <class Ops>
class FinGroup {
 public:
  using Elem = typename Ops::Elem;

  FinGroup(std::vector<Elem> generators, Ops ops, std::size_t bound = kDefaultGroupBound)
      : ops_(std::move(ops)) {
    elems_.push_back(ops_.identity());
    index_[ops_.key(elems_[0])] = 0;
    std::vector<Elem> gens;
    for (auto& g : generators) {
      std::string k = ops_.key(g);
      if (index_.find(k) == index_.end()) {
        if (elems_.size() >= bound) throw GroupBoundExceeded(bound);
        index_[k] = static_cast<int>(elems_.size());
        elems_.push_back(g);
      }
      gens.push_back(std::move(g));
    }
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      for (const Elem& g : gens) {
        Elem next = ops_.mul(elems_[head], g);
        std::string k = ops_.key(next);
        if (index_.find(k) == index_.end()) {
          if (elems_.size() >= bound) throw GroupBoundExceeded(bound);
          index_[k] = static_cast<int>(elems_.size());
          elems_.push_back(std::move(next));
        }
      }
    }
    inv_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      auto it = index_.find(ops_.key(ops_.inv(elems_[i])));
      if (it == index_.end()) throw std::invalid_argument("generator set not closed under inverse");
      inv_[i] = it->second;
    }
    gen_idx_.clear();
    for (const Elem& g : gens) gen_idx_.push_back(index_.at(ops_.key(g)));
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const Elem& elem(int i) const { return elems_[i]; }
  const Ops& ops() const { return ops_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  int index_of(const Elem& e) const {
    auto it = index_.find(ops_.key(e));
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }
  bool contains(const Elem& e) const { return index_.find(ops_.key(e)) != index_.end(); }

  int mult(int i, int j) const { return index_of(ops_.mul(elems_[i], elems_[j])); }
  int inv(int i) const { return inv_[i]; }
  int conj(int g, int x) const { return mult(mult(g, x), inv_[g]); }

  int element_order(int i) const {
    int o = 1;
    int cur = i;
    while (cur != 0) {
      cur = mult(cur, i);
      ++o;
    }
    return o;
  }

  Int exponent() const {
    Int e = 1;
    for (int i = 0; i < size(); ++i) e = lcm(e, Int(element_order(i)));
    return e;
  }

  bool is_abelian() const {
    for (int a : gen_idx_)
      for (int b : gen_idx_)
        if (mult(a, b) != mult(b, a)) return false;
    return true;
  }

  // Subgroup generated by the given element indices, re-closed in canonical
  // BFS order of its own. The generating set is first thinned greedily so
  // that large closed subsets (stabilizers, centralizers) do not drag a
  // generator per element through the closure.
  FinGroup subgroup(std::vector<int> gen_indices) const {
    std::sort(gen_indices.begin(), gen_indices.end());
    gen_indices.erase(std::unique(gen_indices.begin(), gen_indices.end()), gen_indices.end());
    std::vector<int> small;
    std::vector<char> in_closure(elems_.size(), 0);
    in_closure[0] = 1;
    std::vector<int> closure{0};
    for (int i : gen_indices) {
      if (in_closure[i]) continue;
      small.push_back(i);
      std::vector<int> queue = closure;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (int g : small) {
          int nxt = mult(queue[head], g);
          if (!in_closure[nxt]) {
            in_closure[nxt] = 1;
            closure.push_back(nxt);
            queue.push_back(nxt);
          }
        }
    }
    std::vector<Elem> gens;
    for (int i : small) gens.push_back(elems_[i]);
    return FinGroup(std::move(gens), ops_, elems_.size() + 1);
  }

 private:
  Ops ops_;
  std::vector<Elem> elems_;
  std::vector<int> inv_;
  std::vector<int> gen_idx_;
  std::unordered_map<std::string, int> index_;
};

struct ConjClassSet {
  std::vector<std::vector<int>> classes;  // each sorted; classes sorted by representative
  std::vector<int> representatives;       // least element index per class
  std::vector<int> class_of;              // element index -> class index

  int count() const { return static_cast<int>(classes.size()); }
};

template <class Ops>
ConjClassSet conjugacy_classes(const FinGroup<Ops>& g) {
  const int n = g.size();
  ConjClassSet out;
  out.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (out.class_of[x] >= 0) continue;
    const int c = out.count();
    std::vector<int> orbit{x};
    out.class_of[x] = c;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int gi : g.generator_indices()) {
        int y = g.conj(gi, orbit[head]);
        if (out.class_of[y] < 0) {
          out.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(orbit.front());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

template <class Ops>
std::vector<int> centralizer_elements(const FinGroup<Ops>& g, int x) {
  std::vector<int> out;
  for (int h = 0; h < g.size(); ++h)
    if (g.mult(h, x) == g.mult(x, h)) out.push_back(h);
  return out;
}

template <class Ops>
FinGroup<Ops> centralizer(const FinGroup<Ops>& g, int x) {
  return g.subgroup(centralizer_elements(g, x));
}

template <class Ops>
bool is_normal_in(const FinGroup<Ops>& g, const std::vector<int>& sub) {
  std::vector<char> member(g.size(), 0);
  for (int s : sub) member[s] = 1;
  for (int h = 0; h < g.size(); ++h)
    for (int s : sub)
      if (!member[g.conj(h, s)]) return false;
  return true;
}

// Element ops for monomial/lattice matrix groups.
struct MatOps {
  using Elem = IntMatrix;
  int n = 0;

  explicit MatOps(int dim) : n(dim) {}
  Elem identity() const { return IntMatrix::identity(n); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return inverse_unimodular(a); }
  std::string key(const Elem& a) const { return a.key(); }
};

using MatGroup = FinGroup<MatOps>;

// Element ops for permutation groups on {0..n-1}.
struct PermOps {
  using Elem = std::vector<int>;
  int n = 0;

  explicit PermOps(int deg) : n(deg) {}
  Elem identity() const {
    Elem e(n);
    std::iota(e.begin(), e.end(), 0);
    return e;
  }
  // (a*b)(i) = a(b(i)): apply b first.
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(n);
    for (int i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
  }
  Elem inv(const Elem& a) const {
    Elem c(n);
    for (int i = 0; i < n; ++i) c[a[i]] = i;
    return c;
  }
  std::string key(const Elem& a) const {
    std::string s;
    for (int v : a) {
      s += std::to_string(v);
      s += ',';
    }
    return s;
  }
};

using PermGroup = FinGroup<PermOps>;

}  // namespace exq

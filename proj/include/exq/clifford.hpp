#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "exq/chartable.hpp"
#include "exq/group.hpp"

namespace exq {

// Automorphism of a closed group given by generator images, extended to a
// permutation of the whole element set. Every non-seed BFS element factors
// as (earlier element) * generator, so images propagate.
template <class Ops>
std::vector<int> extend_automorphism(const FinGroup<Ops>& g, const std::vector<int>& gen_images) {
  const auto& gens = g.generator_indices();
  if (gen_images.size() != gens.size()) throw std::invalid_argument("one image per generator required");
  std::vector<int> perm(g.size(), -1);
  perm[0] = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) perm[gens[i]] = gen_images[i];
  for (int x = 1; x < g.size(); ++x) {
    if (perm[x] >= 0) continue;
    bool found = false;
    for (std::size_t i = 0; i < gens.size() && !found; ++i) {
      int y = g.mult(x, g.inv(gens[i]));
      if (y < x && perm[y] >= 0 && perm[gens[i]] >= 0) {
        perm[x] = g.mult(perm[y], perm[gens[i]]);
        found = true;
      }
    }
    if (!found) throw std::logic_error("element not reachable from earlier elements");
  }
  // Verify multiplicativity; this also catches inconsistent generator images.
  for (int a = 0; a < g.size(); ++a)
    for (int gi : gens)
      if (perm[g.mult(a, gi)] != g.mult(perm[a], perm[gi]))
        throw std::invalid_argument("generator images do not define an automorphism");
  std::vector<char> hit(g.size(), 0);
  for (int v : perm) {
    if (v < 0 || hit[v]) throw std::invalid_argument("generator images do not define a bijection");
    hit[v] = 1;
  }
  return perm;
}

template <class O1, class O2>
struct SemidirectOps {
  using Elem = std::pair<int, int>;
  std::shared_ptr<const FinGroup<O1>> g1;
  std::shared_ptr<const FinGroup<O2>> g2;
  std::shared_ptr<const std::vector<std::vector<int>>> action;

  Elem identity() const { return {0, 0}; }
  // (a,g)(b,h) = (a * alpha_g(b), g h)
  Elem mul(const Elem& x, const Elem& y) const {
    return {g1->mult(x.first, (*action)[x.second][y.first]), g2->mult(x.second, y.second)};
  }
  Elem inv(const Elem& x) const {
    int gi = g2->inv(x.second);
    return {(*action)[gi][g1->inv(x.first)], gi};
  }
  std::string key(const Elem& x) const {
    return std::to_string(x.first) + "," + std::to_string(x.second);
  }
};

// Semidirect product datum: Gamma acting on Gamma1 by automorphisms, with
// the closed product group alongside.
template <class O1, class O2>
class SemidirectDatum {
 public:
  using ProductOps = SemidirectOps<O1, O2>;
  using ProductGroup = FinGroup<ProductOps>;

  // gen_images[i][j] = image element index of gamma1's j-th generator under
  // the automorphism attached to gamma's i-th generator.
  SemidirectDatum(FinGroup<O1> gamma1, FinGroup<O2> gamma,
                  const std::vector<std::vector<int>>& gen_images)
      : g1_(std::make_shared<FinGroup<O1>>(std::move(gamma1))),
        g2_(std::make_shared<FinGroup<O2>>(std::move(gamma))) {
    const auto& ggens = g2_->generator_indices();
    if (gen_images.size() != ggens.size())
      throw std::invalid_argument("one automorphism per gamma generator required");
    auto action = std::make_shared<std::vector<std::vector<int>>>(g2_->size());
    std::vector<int> id(g1_->size());
    for (int i = 0; i < g1_->size(); ++i) id[i] = i;
    (*action)[0] = id;
    for (std::size_t i = 0; i < ggens.size(); ++i)
      (*action)[ggens[i]] = extend_automorphism(*g1_, gen_images[i]);
    for (int x = 1; x < g2_->size(); ++x) {
      if (!(*action)[x].empty()) continue;
      bool found = false;
      for (std::size_t i = 0; i < ggens.size() && !found; ++i) {
        int y = g2_->mult(x, g2_->inv(ggens[i]));
        if (y < x && !(*action)[y].empty() && !(*action)[ggens[i]].empty()) {
          const auto& py = (*action)[y];
          const auto& pg = (*action)[ggens[i]];
          std::vector<int> comp(g1_->size());
          for (int e = 0; e < g1_->size(); ++e) comp[e] = py[pg[e]];
          (*action)[x] = std::move(comp);
          found = true;
        }
      }
      if (!found) throw std::logic_error("gamma element unreachable");
    }
    // Homomorphism check over generators.
    for (int x = 0; x < g2_->size(); ++x)
      for (int gi : ggens) {
        int xg = g2_->mult(x, gi);
        for (int e = 0; e < g1_->size(); ++e)
          if ((*action)[xg][e] != (*action)[x][(*action)[gi][e]])
            throw std::invalid_argument("action is not a homomorphism to Aut(Gamma1)");
      }
    action_ = std::move(action);

    ProductOps ops{g1_, g2_, action_};
    std::vector<typename ProductOps::Elem> gens;
    for (int gi : g1_->generator_indices()) gens.push_back({gi, 0});
    for (int gi : ggens) gens.push_back({0, gi});
    product_ = std::make_shared<ProductGroup>(std::move(gens), ops);
    if (product_->size() != g1_->size() * g2_->size())
      throw std::logic_error("semidirect product has wrong order");
  }

  const FinGroup<O1>& gamma1() const { return *g1_; }
  const FinGroup<O2>& gamma() const { return *g2_; }
  const std::vector<std::vector<int>>& action() const { return *action_; }
  const ProductGroup& product() const { return *product_; }

 private:
  std::shared_ptr<FinGroup<O1>> g1_;
  std::shared_ptr<FinGroup<O2>> g2_;
  std::shared_ptr<const std::vector<std::vector<int>>> action_;
  std::shared_ptr<ProductGroup> product_;
};

struct IrrOrbit {
  std::vector<int> rows;       // row indices of the gamma1 table, sorted
  int rep_row = 0;             // least row in the orbit
  std::vector<int> stabilizer; // element indices in gamma fixing the rep row
};

namespace detail {

// Permutation of gamma1 character-table rows induced by one gamma element:
// chi -> chi o alpha^{-1}.
inline std::vector<int> row_permutation(const CharTable& t, const std::vector<int>& alpha_inv) {
  const int k = t.num_classes();
  std::vector<int> class_perm(k);
  for (int c = 0; c < k; ++c)
    class_perm[c] = t.classes.class_of[alpha_inv[t.classes.representatives[c]]];
  const CycField& f = *t.field;
  std::vector<int> out(t.num_irreducibles(), -1);
  for (int r = 0; r < t.num_irreducibles(); ++r) {
    // Permuted value vector of row r.
    for (int r2 = 0; r2 < t.num_irreducibles(); ++r2) {
      bool match = true;
      for (int c = 0; c < k && match; ++c)
        if (f.compare(t.rows[r2][c], t.rows[r][class_perm[c]]) != 0) match = false;
      if (match) {
        out[r] = r2;
        break;
      }
    }
    if (out[r] < 0) throw std::logic_error("twisted character is not in the table");
  }
  return out;
}

}  // namespace detail

template <class O1, class O2>
std::vector<IrrOrbit> orbits_on_irr(const SemidirectDatum<O1, O2>& d, const CharTable& g1_table) {
  const auto& g2 = d.gamma();
  // chi -> chi o alpha_g^{-1} row permutation for every gamma element.
  std::vector<std::vector<int>> rperm(g2.size());
  for (int g = 0; g < g2.size(); ++g)
    rperm[g] = detail::row_permutation(g1_table, d.action()[g2.inv(g)]);

  const int nrows = g1_table.num_irreducibles();
  std::vector<int> orbit_of(nrows, -1);
  std::vector<IrrOrbit> out;
  for (int r = 0; r < nrows; ++r) {
    if (orbit_of[r] >= 0) continue;
    IrrOrbit o;
    o.rep_row = r;
    for (int g = 0; g < g2.size(); ++g) {
      int img = rperm[g][r];
      if (orbit_of[img] < 0) {
        orbit_of[img] = static_cast<int>(out.size());
        o.rows.push_back(img);
      }
      if (img == r) o.stabilizer.push_back(g);
    }
    std::sort(o.rows.begin(), o.rows.end());
    out.push_back(std::move(o));
  }
  return out;
}

// One label per (orbit representative, irreducible of its stabilizer),
// assuming the cocycle on each orbit is trivial. Dimensions follow the
// induction formula [Gamma : Gamma_x] * dim(chi) * dim(psi).
struct CliffordLabel {
  int orbit = 0;
  int orbit_rep_row = 0;
  Int chi_dim = 1;
  int stabilizer_order = 1;
  int psi = 0;
  Int psi_dim = 1;
  Int dim = 1;
};

enum class CocycleFlag { proved_trivial, nontrivial_detected, undetermined };

struct CocycleStatus {
  std::vector<CocycleFlag> per_orbit;
  Int label_count = 0;
  Int product_class_count = 0;
  Int label_dim_square_sum = 0;
  Int product_order = 0;

  bool all_trivial() const {
    for (auto f : per_orbit)
      if (f != CocycleFlag::proved_trivial) return false;
    return true;
  }
};

struct CliffordListing {
  CharTable gamma1_table;
  std::vector<IrrOrbit> orbits;
  std::vector<CliffordLabel> labels;
};

template <class O1, class O2>
CliffordListing clifford_irr_list(const SemidirectDatum<O1, O2>& d) {
  CliffordListing res;
  res.gamma1_table = character_table(d.gamma1());
  res.orbits = orbits_on_irr(d, res.gamma1_table);
  const auto& g2 = d.gamma();
  for (std::size_t oi = 0; oi < res.orbits.size(); ++oi) {
    const IrrOrbit& o = res.orbits[oi];
    auto stab = g2.subgroup(o.stabilizer);
    CharTable stab_table = character_table(stab);
    Int index = Int(g2.size()) / stab.size();
    for (int psi = 0; psi < stab_table.num_irreducibles(); ++psi) {
      CliffordLabel lab;
      lab.orbit = static_cast<int>(oi);
      lab.orbit_rep_row = o.rep_row;
      lab.chi_dim = res.gamma1_table.degrees[o.rep_row];
      lab.stabilizer_order = stab.size();
      lab.psi = psi;
      lab.psi_dim = stab_table.degrees[psi];
      lab.dim = index * lab.chi_dim * lab.psi_dim;
      res.labels.push_back(lab);
    }
  }
  return res;
}

// Count reconciliation against the product group, computed directly. A match
// on both counts proves every orbit cocycle trivial; a mismatch localizes to
// the orbits whose stabilizers are not forced trivial by cyclicity.
template <class O1, class O2>
CocycleStatus validate_clifford(const SemidirectDatum<O1, O2>& d) {
  CliffordListing res = clifford_irr_list(d);
  CocycleStatus st;
  st.label_count = static_cast<long long>(res.labels.size());
  st.product_order = d.product().size();
  st.product_class_count = conjugacy_classes(d.product()).count();
  for (const auto& lab : res.labels) st.label_dim_square_sum += lab.dim * lab.dim;

  bool match = st.label_count == st.product_class_count && st.label_dim_square_sum == st.product_order;
  const auto& g2 = d.gamma();
  for (const auto& o : res.orbits) {
    if (match) {
      st.per_orbit.push_back(CocycleFlag::proved_trivial);
      continue;
    }
    // H^2 of a cyclic group is trivial, so those orbits cannot obstruct.
    auto stab = g2.subgroup(o.stabilizer);
    bool cyclic = false;
    for (int i = 0; i < stab.size() && !cyclic; ++i)
      if (stab.element_order(i) == stab.size()) cyclic = true;
    st.per_orbit.push_back(cyclic ? CocycleFlag::proved_trivial : CocycleFlag::undetermined);
  }
  if (!match) {
    int open = 0, last = -1;
    for (std::size_t i = 0; i < st.per_orbit.size(); ++i)
      if (st.per_orbit[i] == CocycleFlag::undetermined) {
        ++open;
        last = static_cast<int>(i);
      }
    if (open == 1) st.per_orbit[last] = CocycleFlag::nontrivial_detected;
  }
  return st;
}

}  // namespace exq

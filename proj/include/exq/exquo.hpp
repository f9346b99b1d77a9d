#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exq/chartable.hpp"
#include "exq/partitions.hpp"
#include "exq/springer.hpp"
#include "exq/torus.hpp"
#include "exq/weyl.hpp"

namespace exq {

// Bundled acting datum: the group W^s with its torus action, conjugacy
// classes, and the decomposition of its root system into irreducible
// components. All higher-level operations run against one of these.
struct SeriesContext {
  RootDatum h;  // roots = R^s
  MatGroup ws;
  TorusActionCache cache;
  ConjClassSet classes;
  std::vector<SubsystemComponent> ambient;

  enum class AmbientKind { torus, type_a_products, rank2, other };
  AmbientKind ambient_kind = AmbientKind::torus;

  SeriesContext(RootDatum h_in, MatGroup ws_in)
      : h(std::move(h_in)),
        ws(std::move(ws_in)),
        cache(ws),
        classes(conjugacy_classes(ws)) {
    std::vector<int> all(h.num_roots());
    for (int i = 0; i < h.num_roots(); ++i) all[i] = i;
    ambient = decompose_subsystem(h, all);
    if (ambient.empty()) {
      ambient_kind = AmbientKind::torus;
    } else {
      bool all_a = true;
      for (const auto& c : ambient)
        if (c.kind != SubsystemComponent::Kind::type_a) all_a = false;
      if (all_a)
        ambient_kind = AmbientKind::type_a_products;
      else if (ambient.size() == 1 && (ambient[0].kind == SubsystemComponent::Kind::b2 ||
                                       ambient[0].kind == SubsystemComponent::Kind::g2))
        ambient_kind = AmbientKind::rank2;
      else
        ambient_kind = AmbientKind::other;
    }
  }

  int rank() const { return h.rank; }

  TorusPoint canonical_point(const TorusPoint& t) const {
    return cache.canonical_orbit_representative(t);
  }
};

inline SeriesContext full_series_context(const RootDatum& rd, std::size_t bound = kDefaultGroupBound) {
  MatGroup w = weyl_group(rd, bound);
  return SeriesContext(rd, std::move(w));
}

// ---------------------------------------------------------------------------
// Extended quotient of the first kind.

struct EQComponentFirst {
  int class_index = 0;
  int class_rep = 0;  // element index in W
  FixedLocus locus;
  std::vector<int> centralizer;      // element indices in W
  std::vector<int> component_orbit;  // orbit id of each fixed-locus component
  Int quotient_component_count = 0;
};

inline std::vector<EQComponentFirst> extended_quotient_first(const SeriesContext& ctx) {
  std::vector<EQComponentFirst> out;
  for (int c = 0; c < ctx.classes.count(); ++c) {
    EQComponentFirst entry;
    entry.class_index = c;
    entry.class_rep = ctx.classes.representatives[c];
    FixedLocusBuilder builder({ctx.cache.torus_matrix(entry.class_rep)});
    entry.locus.dimension = builder.dimension();
    entry.locus.structure = builder.structure();
    entry.locus.component_count = builder.component_count();
    auto comps = builder.all_components();
    for (const auto& cid : comps)
      entry.locus.sample_points.push_back(builder.point(cid, builder.unit_free_values()));
    entry.centralizer = centralizer_elements(ctx.ws, entry.class_rep);

    // Orbits of the centralizer on the component set.
    std::map<std::vector<Int>, int> comp_index;
    for (std::size_t i = 0; i < comps.size(); ++i) comp_index[comps[i]] = static_cast<int>(i);
    entry.component_orbit.assign(comps.size(), -1);
    int orbit_id = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (entry.component_orbit[i] >= 0) continue;
      std::vector<int> queue{static_cast<int>(i)};
      entry.component_orbit[i] = orbit_id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const TorusPoint& s = entry.locus.sample_points[queue[head]];
        for (int z : entry.centralizer) {
          int target = comp_index.at(builder.component_id(ctx.cache.apply(z, s)));
          if (entry.component_orbit[target] < 0) {
            entry.component_orbit[target] = orbit_id;
            queue.push_back(target);
          }
        }
      }
      ++orbit_id;
    }
    entry.quotient_component_count = orbit_id;
    out.push_back(std::move(entry));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fibers of the projection to T/W at sqrt(q) = 1: the count of conjugacy
// classes of the stabilizer, double-checked against the irreducible count.

struct FiberReport {
  TorusPoint point;  // canonical orbit representative
  int stabilizer_order = 1;
  int class_count = 1;
  int irr_count = 1;
  int predicted_constituents = 1;
};

inline FiberReport fiber_cardinality(const SeriesContext& ctx, const TorusPoint& t) {
  FiberReport rep;
  rep.point = ctx.canonical_point(t);
  MatGroup wt = ctx.ws.subgroup(ctx.cache.stabilizer_indices(rep.point));
  rep.stabilizer_order = wt.size();
  rep.class_count = conjugacy_classes(wt).count();
  rep.irr_count = character_table(wt).num_irreducibles();
  if (rep.class_count != rep.irr_count)
    throw std::logic_error("class count and irreducible count disagree");
  rep.predicted_constituents = rep.class_count;
  return rep;
}

// ---------------------------------------------------------------------------
// Second-kind fibers with Springer decoration.

// Nilpotent datum: one partition per type-A component of the vanishing root
// system (blocks), or an orbit of the rank-2 tables when the vanishing
// system is a full B2/G2.
struct BlockNilpotent {
  struct Block {
    std::vector<int> chain;  // simple roots of the component, chain order (h-datum indices)
    Partition part;          // of chain.size() + 1
  };
  std::vector<Block> blocks;
  std::optional<int> rank2_orbit;
  SubsystemComponent::Kind rank2_kind = SubsystemComponent::Kind::other;

  bool is_zero() const {
    if (rank2_orbit) return *rank2_orbit == 0;
    for (const auto& b : blocks)
      if (!b.part.is_all_ones()) return false;
    return true;
  }
};

// Cocharacter exponents of gamma(Y_alpha) for the nilpotent: per type-A
// block, the partial sums of the Jordan exponents weight the chain coroots;
// for a rank-2 orbit the table value is used.
inline std::vector<Int> nilpotent_cocharacter(const RootDatum& h, const BlockNilpotent& x) {
  std::vector<Int> out(h.rank, Int(0));
  if (x.rank2_orbit) {
    return rank2_springer_table(x.rank2_kind).orbits[*x.rank2_orbit].h;
  }
  for (const auto& b : x.blocks) {
    std::vector<Int> exps = jm_exponents(b.part);
    Int partial = 0;
    for (std::size_t i = 0; i < b.chain.size(); ++i) {
      partial += exps[i];
      const auto& coroot = h.coroots[b.chain[i]];
      for (int k = 0; k < h.rank; ++k) out[k] += partial * coroot[k];
    }
  }
  return out;
}

// Label of the unipotent class of H containing exp(x); cells of the
// extended affine Weyl group are indexed by these.
struct CellLabel {
  std::string key;
  bool is_lowest = true;

  friend bool operator==(const CellLabel& a, const CellLabel& b) { return a.key == b.key; }
  friend bool operator!=(const CellLabel& a, const CellLabel& b) { return !(a == b); }
  friend bool operator<(const CellLabel& a, const CellLabel& b) { return a.key < b.key; }
};

inline CellLabel cell_label(const SeriesContext& ctx, const BlockNilpotent& x) {
  CellLabel out;
  if (ctx.ambient_kind == SeriesContext::AmbientKind::torus) {
    out.key = "c0";
    out.is_lowest = true;
    return out;
  }
  if (ctx.ambient_kind == SeriesContext::AmbientKind::rank2) {
    const Rank2Table& table = rank2_springer_table(ctx.ambient[0].kind);
    int orbit = -1;
    if (x.rank2_orbit) {
      orbit = *x.rank2_orbit;
    } else {
      // Orbits are classified by their cocharacter up to W-conjugacy.
      std::vector<Int> hx = nilpotent_cocharacter(ctx.h, x);
      for (int i = 0; i < ctx.ws.size() && orbit < 0; ++i) {
        std::vector<Int> moved = ctx.cache.torus_matrix(i).apply(hx);
        for (std::size_t o = 0; o < table.orbits.size(); ++o)
          if (table.orbits[o].h == moved) {
            orbit = static_cast<int>(o);
            break;
          }
      }
      if (orbit < 0) throw std::logic_error("nilpotent cocharacter matches no rank-2 orbit");
    }
    out.key = table.orbits[orbit].name;
    out.is_lowest = table.orbits[orbit].closure_index == 0;
    return out;
  }
  if (ctx.ambient_kind != SeriesContext::AmbientKind::type_a_products)
    throw std::invalid_argument("cells unsupported for this root system");

  // Jordan type per ambient component: block partitions padded with 1s to
  // the component's letter count.
  std::vector<std::vector<int>> parts(ctx.ambient.size());
  std::vector<int> used(ctx.ambient.size(), 0);
  for (const auto& b : x.blocks) {
    int home = -1;
    for (std::size_t a = 0; a < ctx.ambient.size() && home < 0; ++a)
      if (std::find(ctx.ambient[a].roots.begin(), ctx.ambient[a].roots.end(), b.chain.front()) !=
          ctx.ambient[a].roots.end())
        home = static_cast<int>(a);
    if (home < 0) throw std::logic_error("block lies in no ambient component");
    for (int p : b.part.parts) parts[home].push_back(p);
    used[home] += b.part.n();
  }
  out.is_lowest = true;
  out.key = "A";
  for (std::size_t a = 0; a < ctx.ambient.size(); ++a) {
    int letters = static_cast<int>(ctx.ambient[a].simple.size()) + 1;
    for (int i = used[a]; i < letters; ++i) parts[a].push_back(1);
    std::sort(parts[a].rbegin(), parts[a].rend());
    Partition lam(parts[a]);
    if (!lam.is_all_ones()) out.is_lowest = false;
    out.key += ":" + lam.str();
  }
  return out;
}

struct SpringerData {
  BlockNilpotent x;
  int rho = 0;  // local-system label; 0 is the trivial one (forced in type A)
  int psi = 0;  // irreducible of the stabilizer of tau(x, rho) in pi0
  std::vector<Int> h;  // cached cocharacter exponents
};

struct SecondKindPoint {
  TorusPoint t;  // canonical orbit representative
  int tau = 0;   // position in the canonical enumeration of Irr(W_t)
  std::optional<SpringerData> springer;
};

// All second-kind points over the orbit of t: one per irreducible of W_t,
// produced through the stabilizer decomposition W_t = W_M0 x| pi0 and the
// label set (Irr W_M0 // pi0)_2. Counts are reconciled against the class
// count of W_t; a mismatch would flag a nontrivial cocycle.
inline std::vector<SecondKindPoint> second_kind_fiber(const SeriesContext& ctx, const TorusPoint& t) {
  TorusPoint rep = ctx.canonical_point(t);
  StabilizerDecomposition levi = levi_decompose(ctx.h, ctx.ws, rep);
  const MatGroup& wt = levi.w_t;
  const int irr_count = conjugacy_classes(wt).count();

  std::vector<SecondKindPoint> out;
  auto comps = decompose_subsystem(ctx.h, levi.vanishing_roots);

  bool all_type_a = true;
  for (const auto& c : comps)
    if (c.kind != SubsystemComponent::Kind::type_a) all_type_a = false;

  if (!comps.empty() && !all_type_a) {
    if (comps.size() == 1 && (comps[0].kind == SubsystemComponent::Kind::b2 ||
                              comps[0].kind == SubsystemComponent::Kind::g2) &&
        levi.pi0_order() == 1) {
      const Rank2Table& table = rank2_springer_table(comps[0].kind);
      CharTable ct = character_table(wt);
      auto named = rank2_named_classes(table, ctx.h, comps[0], wt, ct.classes);
      for (std::size_t p = 0; p < table.pairs.size(); ++p) {
        rank2_pair_row(table.pairs[p], ct, named);  // validates the match
        SecondKindPoint pt;
        pt.t = rep;
        pt.tau = static_cast<int>(p);
        SpringerData sd;
        sd.x.rank2_orbit = table.pairs[p].orbit;
        sd.x.rank2_kind = comps[0].kind;
        sd.rho = table.pairs[p].local_system;
        sd.psi = 0;
        sd.h = table.orbits[table.pairs[p].orbit].h;
        pt.springer = std::move(sd);
        out.push_back(std::move(pt));
      }
      if (static_cast<int>(out.size()) != irr_count)
        throw std::logic_error("rank-2 springer labels do not exhaust Irr(W_t)");
      return out;
    }
    // Unsupported shape: emit undecorated points.
    for (int i = 0; i < irr_count; ++i) {
      SecondKindPoint pt;
      pt.t = rep;
      pt.tau = i;
      out.push_back(std::move(pt));
    }
    return out;
  }

  // Type-A product case. Irr(W_M0) = tuples of partitions, one per block.
  std::vector<std::vector<Partition>> choices;
  for (const auto& c : comps) choices.push_back(all_partitions(static_cast<int>(c.simple.size()) + 1));
  std::vector<std::vector<Partition>> tuples;
  {
    std::vector<Partition> cur(comps.size());
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == comps.size()) {
        tuples.push_back(cur);
        return;
      }
      for (const auto& p : choices[pos]) {
        cur[pos] = p;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }

  // pi0 permutes the components; its action on tuples permutes entries.
  std::vector<std::vector<int>> comp_perm(levi.pi0_order());
  for (int pi = 0; pi < levi.pi0_order(); ++pi) {
    const IntMatrix& m = wt.elem(levi.pi0[pi]);
    comp_perm[pi].assign(comps.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::vector<Int> img = m.apply(ctx.h.roots[comps[c].simple.front()]);
      int target = ctx.h.root_index(img);
      if (target < 0) throw std::logic_error("pi0 does not permute the vanishing roots");
      for (std::size_t c2 = 0; c2 < comps.size(); ++c2)
        if (std::find(comps[c2].roots.begin(), comps[c2].roots.end(), target) != comps[c2].roots.end())
          comp_perm[pi][c] = static_cast<int>(c2);
      if (comp_perm[pi][c] < 0) throw std::logic_error("component image not found");
    }
  }

  std::set<std::vector<Partition>> seen;
  int tau_index = 0;
  for (const auto& tup : tuples) {
    if (seen.count(tup)) continue;
    // Orbit of the tuple under pi0 and its stabilizer.
    std::vector<int> stab;
    std::vector<std::vector<Partition>> orbit;
    for (int pi = 0; pi < levi.pi0_order(); ++pi) {
      std::vector<Partition> moved(tup.size());
      for (std::size_t c = 0; c < tup.size(); ++c) moved[comp_perm[pi][c]] = tup[c];
      if (moved == tup) stab.push_back(levi.pi0[pi]);
      orbit.push_back(std::move(moved));
    }
    for (auto& o : orbit) seen.insert(std::move(o));

    MatGroup stab_group = wt.subgroup(stab);
    CharTable stab_table = character_table(stab_group);
    for (int psi = 0; psi < stab_table.num_irreducibles(); ++psi) {
      SecondKindPoint pt;
      pt.t = rep;
      pt.tau = tau_index++;
      SpringerData sd;
      for (std::size_t c = 0; c < comps.size(); ++c)
        sd.x.blocks.push_back(BlockNilpotent::Block{comps[c].simple, tup[c]});
      sd.rho = 0;
      sd.psi = psi;
      sd.h = nilpotent_cocharacter(ctx.h, sd.x);
      pt.springer = std::move(sd);
      out.push_back(std::move(pt));
    }
  }
  if (static_cast<int>(out.size()) != irr_count)
    throw std::logic_error("clifford labels do not exhaust Irr(W_t)");
  return out;
}

// ---------------------------------------------------------------------------
// c-Irr systems: a bijection c(H_j) -> Irr(H_j) for each conjugacy class of
// realized stabilizer subgroups. For stabilizers that are reflection groups
// of type-A product subsystems with trivial pi0 there is a canonical choice,
// cycle type lambda <-> Specht label lambda; anything else falls back to a
// deterministic degree-vs-class-size pairing and is flagged non-canonical.

struct CIrrEntry {
  std::vector<int> subgroup;   // element indices in W^s, sorted
  TorusPoint witness_point;    // a point whose stabilizer is this subgroup
  bool canonical = false;
  std::vector<int> irr_of_class;  // class index of H_j -> row of its character table
};

struct CIrrSystem {
  std::vector<CIrrEntry> entries;
};

namespace detail {

// Cycle types of a stabilizer element on the letters of each type-A
// component: the image of e_a - e_b under w determines the letter
// permutation of the chain.
inline std::vector<Partition> component_cycle_types(const RootDatum& h,
                                                    const std::vector<SubsystemComponent>& comps,
                                                    const IntMatrix& w) {
  std::vector<Partition> out;
  for (const auto& comp : comps) {
    const int r = static_cast<int>(comp.simple.size());
    const int letters = r + 1;
    // Chain coordinates of a root vector: run of +-1 between the endpoints.
    auto decompose = [&](const std::vector<Int>& v) -> std::pair<int, int> {
      // Solve v = sum c_i * simple_i over the chain; c must be a run of 1s
      // (head, tail) or -1s (tail, head).
      std::vector<std::vector<Int>> cols(r);
      for (int i = 0; i < r; ++i) cols[i] = h.roots[comp.simple[i]];
      // Greedy: try all head/tail pairs.
      for (int a = 0; a < letters; ++a)
        for (int b = 0; b < letters; ++b) {
          if (a == b) continue;
          std::vector<Int> sum(h.rank, Int(0));
          int lo = std::min(a, b), hi = std::max(a, b);
          Int sign = a < b ? 1 : -1;
          for (int k = lo; k < hi; ++k)
            for (int m = 0; m < h.rank; ++m) sum[m] += sign * cols[k][m];
          if (sum == v) return {a, b};
        }
      throw std::logic_error("root is not in the chain span");
    };
    std::vector<int> sigma(letters, -1);
    if (r == 0) {
      out.push_back(Partition{1});
      continue;
    }
    for (int j = 1; j < letters; ++j) {
      // w(e_0 - e_j) = e_{sigma 0} - e_{sigma j}
      std::vector<Int> v(h.rank, Int(0));
      for (int k = 0; k < j; ++k)
        for (int m = 0; m < h.rank; ++m) v[m] += h.roots[comp.simple[k]][m];
      auto [hd, tl] = decompose(w.apply(v));
      if (j == 1) sigma[0] = hd;
      if (sigma[0] != hd) throw std::logic_error("inconsistent letter permutation");
      sigma[j] = tl;
    }
    std::vector<char> seen(letters, 0);
    std::vector<int> cycles;
    for (int s = 0; s < letters; ++s) {
      if (seen[s]) continue;
      int len = 0, cur = s;
      while (!seen[cur]) {
        seen[cur] = 1;
        cur = sigma[cur];
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    out.push_back(Partition(cycles));
  }
  return out;
}

}  // namespace detail

// Conjugacy classes of stabilizer subgroups realized by points of the torus,
// discovered from the generic points of the fixed-locus strata and their
// pairwise joins.
inline std::vector<std::vector<int>> realized_stabilizer_classes(const SeriesContext& ctx,
                                                                 std::vector<TorusPoint>* witnesses) {
  std::vector<std::vector<int>> found;
  std::vector<TorusPoint> points;
  auto add_candidate = [&](const TorusPoint& p) {
    std::vector<int> stab = ctx.cache.stabilizer_indices(p);
    if (std::find(found.begin(), found.end(), stab) == found.end()) {
      found.push_back(stab);
      points.push_back(p);
      return true;
    }
    return false;
  };

  {
    // Fully generic point: realizes the kernel of the action.
    FixedLocusBuilder b({IntMatrix::identity(ctx.rank())});
    add_candidate(b.point({}, b.generic_free_values()));
  }
  for (int c = 0; c < ctx.classes.count(); ++c) {
    FixedLocusBuilder b({ctx.cache.torus_matrix(ctx.classes.representatives[c])});
    for (const auto& comp : b.all_components()) add_candidate(b.point(comp, b.generic_free_values()));
  }
  // Close under joins of the strata found so far.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> snapshot = found;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<IntMatrix> mats;
        for (int e : snapshot[i]) mats.push_back(ctx.cache.torus_matrix(e));
        for (int e : snapshot[j]) mats.push_back(ctx.cache.torus_matrix(e));
        FixedLocusBuilder b(mats);
        for (const auto& comp : b.all_components())
          if (add_candidate(b.point(comp, b.generic_free_values()))) grew = true;
      }
  }

  // Deduplicate up to conjugacy in W^s.
  std::vector<std::vector<int>> classes;
  std::vector<TorusPoint> class_points;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool dup = false;
    for (const auto& cls : classes) {
      if (cls.size() != found[i].size()) continue;
      for (int g = 0; g < ctx.ws.size() && !dup; ++g) {
        std::vector<int> conj;
        for (int s : found[i]) conj.push_back(ctx.ws.conj(g, s));
        std::sort(conj.begin(), conj.end());
        if (conj == cls) dup = true;
      }
      if (dup) break;
    }
    if (!dup) {
      classes.push_back(found[i]);
      class_points.push_back(points[i]);
    }
  }
  if (witnesses) *witnesses = class_points;
  return classes;
}

inline CIrrSystem build_c_irr_system(const SeriesContext& ctx) {
  CIrrSystem sys;
  std::vector<TorusPoint> witnesses;
  auto classes = realized_stabilizer_classes(ctx, &witnesses);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    CIrrEntry entry;
    entry.subgroup = classes[k];
    entry.witness_point = witnesses[k];
    MatGroup hgrp = ctx.ws.subgroup(entry.subgroup);
    ConjClassSet hcls = conjugacy_classes(hgrp);
    CharTable htab = character_table(hgrp);

    StabilizerDecomposition levi = levi_decompose(ctx.h, ctx.ws, entry.witness_point);
    auto comps = decompose_subsystem(ctx.h, levi.vanishing_roots);
    bool all_type_a = true;
    for (const auto& c : comps)
      if (c.kind != SubsystemComponent::Kind::type_a) all_type_a = false;

    if (all_type_a && levi.pi0_order() == 1 && hgrp.size() == levi.wt_order()) {
      // Canonical pairing: the class of cycle type lambda (per component)
      // matches the Specht label lambda. Character rows are located by their
      // Murnaghan-Nakayama values.
      entry.canonical = true;
      entry.irr_of_class.assign(hcls.count(), -1);
      for (int c = 0; c < hcls.count(); ++c) {
        std::vector<Partition> mu =
            detail::component_cycle_types(ctx.h, comps, hgrp.elem(hcls.representatives[c]));
        // Row with values prod_c chi_{mu_c} on every class.
        int match = -1;
        for (int r = 0; r < htab.num_irreducibles() && match < 0; ++r) {
          bool ok = true;
          for (int c2 = 0; c2 < hcls.count() && ok; ++c2) {
            std::vector<Partition> nu =
                detail::component_cycle_types(ctx.h, comps, hgrp.elem(hcls.representatives[c2]));
            Int expect = 1;
            for (std::size_t ci = 0; ci < mu.size(); ++ci)
              expect *= symmetric_character_value(mu[ci], nu[ci]);
            if (!htab.field->is_rational(htab.rows[r][c2], Rat(expect))) ok = false;
          }
          if (ok) match = r;
        }
        if (match < 0) throw std::logic_error("specht character not found in table");
        entry.irr_of_class[c] = match;
      }
    } else {
      // Deterministic fallback: classes by (size, representative index)
      // against rows in table order (degree-sorted already).
      entry.canonical = false;
      std::vector<int> class_order(hcls.count());
      for (int c = 0; c < hcls.count(); ++c) class_order[c] = c;
      std::sort(class_order.begin(), class_order.end(), [&](int a, int b) {
        if (hcls.classes[a].size() != hcls.classes[b].size())
          return hcls.classes[a].size() < hcls.classes[b].size();
        return hcls.representatives[a] < hcls.representatives[b];
      });
      entry.irr_of_class.assign(hcls.count(), -1);
      for (int r = 0; r < hcls.count(); ++r) entry.irr_of_class[class_order[r]] = r;
    }
    sys.entries.push_back(std::move(entry));
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Base change endomorphism (t, w) -> (t^f, w).

struct BaseChangeMap {
  Int f = 1;
  bool well_defined = false;
  // Per first-kind entry: image component index of each fixed-locus component.
  std::vector<std::vector<int>> component_image;
};

inline BaseChangeMap base_change(const SeriesContext& ctx, const std::vector<EQComponentFirst>& eq,
                                 const Int& f) {
  if (f < 1) throw std::invalid_argument("base change degree must be positive");
  BaseChangeMap out;
  out.f = f;
  out.well_defined = true;
  for (const auto& entry : eq) {
    FixedLocusBuilder b({ctx.cache.torus_matrix(entry.class_rep)});
    std::map<std::vector<Int>, int> comp_index;
    auto comps = b.all_components();
    for (std::size_t i = 0; i < comps.size(); ++i) comp_index[comps[i]] = static_cast<int>(i);
    std::vector<int> image;
    for (const auto& cid : comps) {
      // Generic samples keep the equivariance check meaningful.
      TorusPoint s = b.point(cid, b.generic_free_values());
      TorusPoint powered = s.pow(f);
      image.push_back(comp_index.at(b.component_id(powered)));
      // (a t)^f = a (t^f) for every a in the group, checked exactly.
      for (int a = 0; a < ctx.ws.size(); ++a)
        if (ctx.cache.apply(a, powered) != ctx.cache.apply(a, s).pow(f)) out.well_defined = false;
    }
    out.component_image.push_back(std::move(image));
  }
  return out;
}

}  // namespace exq

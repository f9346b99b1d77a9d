#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "exq/exquo.hpp"

namespace exq {

// One-parameter subgroup alpha -> (alpha^{k_1}, ..., alpha^{k_n}).
struct Cocharacter {
  std::vector<Int> exponents;

  int rank() const { return static_cast<int>(exponents.size()); }

  TorusPoint eval(const TorusCoord& alpha) const {
    std::vector<TorusCoord> coords;
    coords.reserve(exponents.size());
    for (const Int& k : exponents) coords.push_back(alpha.pow(k));
    return TorusPoint(std::move(coords));
  }
};

// L-parameter data (chi-hat, t, h, nilpotent): the homomorphism
// (u pi^n, Y) -> chi-hat(u) t^n gamma(Y) evaluated on diagonal Y_alpha.
struct LParameter {
  InertialDatum chi_hat;
  TorusPoint t;
  Cocharacter h;
  Partition nilpotent;
};

inline Cocharacter jm_cocharacter(const Partition& lambda) {
  return Cocharacter{jm_exponents(lambda)};
}

inline LParameter build_phi(const InertialDatum& chi_hat, const TorusPoint& t,
                            const Partition& lambda) {
  if (t.rank() != lambda.n()) throw std::invalid_argument("torus rank must match |lambda|");
  chi_hat.validate(t.rank());
  return LParameter{chi_hat, t, jm_cocharacter(lambda), lambda};
}

// Exact evaluation chi-hat(u) * t^n * h(alpha), with u given by exponents
// over the chi-hat generators.
inline TorusPoint eval_phi(const LParameter& p, const std::vector<Int>& u_exponents, const Int& n,
                           const TorusCoord& alpha) {
  if (u_exponents.size() != p.chi_hat.generators.size())
    throw std::invalid_argument("one exponent per chi-hat generator required");
  TorusPoint out = p.t.pow(n);
  for (std::size_t i = 0; i < u_exponents.size(); ++i)
    if (u_exponents[i] != 0) out = out * p.chi_hat.generators[i].pow(u_exponents[i]);
  return out * p.h.eval(alpha);
}

// W^s-orbit of a torus point, keyed by its canonical representative.
struct TorusOrbit {
  TorusPoint canonical;

  friend bool operator==(const TorusOrbit& a, const TorusOrbit& b) {
    return a.canonical == b.canonical;
  }
  friend bool operator!=(const TorusOrbit& a, const TorusOrbit& b) { return !(a == b); }
};

inline TorusOrbit orbit_of(const SeriesContext& ctx, const TorusPoint& t) {
  return TorusOrbit{ctx.canonical_point(t)};
}

// Kazhdan-Lusztig-Reeder parameter: Phi together with rho = varrho x| psi.
struct ReederParameter {
  InertialDatum chi_hat;
  TorusPoint t;
  BlockNilpotent x;
  std::vector<Int> h;  // cocharacter exponents of gamma on the torus
  CellLabel cell;
  int rho = 0;
  int psi = 0;
};

// (Phi, rho) -> orbit of Phi(pi_F, Y_alpha) = orbit of t * h(alpha).
inline TorusOrbit i_alpha(const SeriesContext& ctx, const ReederParameter& rp,
                          const TorusCoord& alpha) {
  TorusPoint moved = rp.t * Cocharacter{rp.h}.eval(alpha);
  return orbit_of(ctx, moved);
}

// (t, tau) -> orbit of t * h_c(alpha) with h_c the correcting cocharacter of
// the point's cell.
inline TorusOrbit pi_alpha(const SeriesContext& ctx, const SecondKindPoint& p,
                           const TorusCoord& alpha) {
  if (!p.springer) throw std::invalid_argument("second-kind point carries no springer data");
  TorusPoint moved = p.t * Cocharacter{p.springer->h}.eval(alpha);
  return orbit_of(ctx, moved);
}

inline CellLabel cell_of(const SeriesContext& ctx, const SecondKindPoint& p) {
  if (!p.springer) throw std::invalid_argument("second-kind point carries no springer data");
  return cell_label(ctx, p.springer->x);
}

namespace detail {

// Blocks of a nilpotent datum compatible with the vanishing system at t,
// from a single global partition. Accepted shapes: everything in one block,
// the all-ones partition (zero nilpotent), or one part per block equal to
// the block size (the regular-per-block shape of a multi-block parameter).
inline BlockNilpotent resolve_blocks(const std::vector<SubsystemComponent>& comps,
                                     const Partition& lambda, int free_letters) {
  BlockNilpotent x;
  if (lambda.is_all_ones()) {
    for (const auto& c : comps)
      x.blocks.push_back(
          BlockNilpotent::Block{c.simple, Partition(std::vector<int>(c.simple.size() + 1, 1))});
    return x;
  }
  if (comps.size() == 1 && free_letters == 0) {
    if (lambda.n() != static_cast<int>(comps[0].simple.size()) + 1)
      throw std::invalid_argument("partition size does not match the block");
    x.blocks.push_back(BlockNilpotent::Block{comps[0].simple, lambda});
    return x;
  }
  // One part per block, regular on each.
  std::vector<int> sizes;
  for (const auto& c : comps) sizes.push_back(static_cast<int>(c.simple.size()) + 1);
  for (int i = 0; i < free_letters; ++i) sizes.push_back(1);
  std::vector<int> sorted_sizes = sizes;
  std::sort(sorted_sizes.rbegin(), sorted_sizes.rend());
  if (sorted_sizes != lambda.parts)
    throw std::invalid_argument("partition is not compatible with the stabilizer blocks");
  for (const auto& c : comps) {
    int m = static_cast<int>(c.simple.size()) + 1;
    x.blocks.push_back(BlockNilpotent::Block{c.simple, Partition{m}});
  }
  return x;
}

}  // namespace detail

// (t, x, rho, psi) -> (Phi, rho x| psi). The labels are checked against the
// stabilizer decomposition at t: rho must be the trivial local system in
// type A, and psi must index an irreducible of the stabilizer of tau(x,rho)
// in pi0.
inline ReederParameter mu_assemble(const SeriesContext& ctx, const TorusPoint& t,
                                   const Partition& lambda, int rho, int psi,
                                   const InertialDatum& chi_hat) {
  chi_hat.validate(ctx.rank());
  TorusPoint rep = ctx.canonical_point(t);
  StabilizerDecomposition levi = levi_decompose(ctx.h, ctx.ws, rep);
  auto comps = decompose_subsystem(ctx.h, levi.vanishing_roots);
  for (const auto& c : comps)
    if (c.kind != SubsystemComponent::Kind::type_a)
      throw std::invalid_argument("mu_assemble supports type-A vanishing systems only");
  if (rho != 0) throw std::invalid_argument("the local system label is forced trivial in type A");

  int letters_in_blocks = 0;
  for (const auto& c : comps) letters_in_blocks += static_cast<int>(c.simple.size()) + 1;
  int free_letters = lambda.n() - letters_in_blocks;
  if (free_letters < 0) throw std::invalid_argument("partition too small for the stabilizer");
  ReederParameter rp;
  rp.chi_hat = chi_hat;
  rp.t = rep;
  rp.x = detail::resolve_blocks(comps, lambda, free_letters);
  rp.h = nilpotent_cocharacter(ctx.h, rp.x);
  rp.cell = cell_label(ctx, rp.x);
  rp.rho = rho;

  // psi indexes Irr of the stabilizer in pi0 of the partition tuple.
  std::vector<Partition> tup;
  for (const auto& b : rp.x.blocks) tup.push_back(b.part);
  std::vector<int> stab;
  const MatGroup& wt = levi.w_t;
  for (int pi = 0; pi < levi.pi0_order(); ++pi) {
    const IntMatrix& m = wt.elem(levi.pi0[pi]);
    std::vector<Partition> moved(tup.size());
    bool ok = true;
    for (std::size_t c = 0; c < comps.size() && ok; ++c) {
      std::vector<Int> img = m.apply(ctx.h.roots[comps[c].simple.front()]);
      int target_root = ctx.h.root_index(img);
      int target = -1;
      for (std::size_t c2 = 0; c2 < comps.size(); ++c2)
        if (std::find(comps[c2].roots.begin(), comps[c2].roots.end(), target_root) !=
            comps[c2].roots.end())
          target = static_cast<int>(c2);
      if (target < 0)
        ok = false;
      else
        moved[target] = tup[c];
    }
    if (ok && moved == tup) stab.push_back(levi.pi0[pi]);
  }
  MatGroup stab_group = wt.subgroup(stab);
  int count = conjugacy_classes(stab_group).count();
  if (psi < 0 || psi >= count) throw std::invalid_argument("psi label out of range for the stabilizer");
  rp.psi = psi;
  return rp;
}

// Assembly from explicit per-block partitions (the general form).
inline ReederParameter mu_assemble_blocks(const SeriesContext& ctx, const TorusPoint& t,
                                          const std::vector<Partition>& parts, int psi,
                                          const InertialDatum& chi_hat) {
  chi_hat.validate(ctx.rank());
  TorusPoint rep = ctx.canonical_point(t);
  StabilizerDecomposition levi = levi_decompose(ctx.h, ctx.ws, rep);
  auto comps = decompose_subsystem(ctx.h, levi.vanishing_roots);
  if (parts.size() != comps.size())
    throw std::invalid_argument("one partition per stabilizer block required");
  ReederParameter rp;
  rp.chi_hat = chi_hat;
  rp.t = rep;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].kind != SubsystemComponent::Kind::type_a)
      throw std::invalid_argument("mu_assemble supports type-A vanishing systems only");
    if (parts[c].n() != static_cast<int>(comps[c].simple.size()) + 1)
      throw std::invalid_argument("partition size does not match its block");
    rp.x.blocks.push_back(BlockNilpotent::Block{comps[c].simple, parts[c]});
  }
  rp.h = nilpotent_cocharacter(ctx.h, rp.x);
  rp.cell = cell_label(ctx, rp.x);
  rp.rho = 0;
  rp.psi = psi;
  return rp;
}

// Same L-packet test: equal cell labels, plus one Weyl element carrying
// (t, h_c) to (t', h_c'). Matching t and h simultaneously under a single
// element is equivalent to the all-alpha condition, since each w either
// matches the whole curve alpha -> t h_c(alpha) or misses it off finitely
// many alpha.
inline bool lpacket_equiv(const SeriesContext& ctx, const SecondKindPoint& p,
                          const SecondKindPoint& q) {
  if (!p.springer || !q.springer) throw std::invalid_argument("springer data required");
  if (cell_of(ctx, p) != cell_of(ctx, q)) return false;
  for (int w = 0; w < ctx.ws.size(); ++w) {
    if (ctx.cache.apply(w, p.t) != q.t) continue;
    if (ctx.cache.torus_matrix(w).apply(p.springer->h) == q.springer->h) return true;
  }
  return false;
}

}  // namespace exq

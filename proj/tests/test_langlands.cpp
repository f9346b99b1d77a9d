#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "exq/langlands.hpp"

using namespace exq;

namespace {

TorusPoint mags(std::initializer_list<long long> ms) {
  std::vector<TorusCoord> v;
  for (long long m : ms) v.emplace_back(Rat(m), Rat(0));
  return TorusPoint(std::move(v));
}

InertialDatum trivial_chi(int n) {
  InertialDatum d;
  d.generators.push_back(TorusPoint::one(n));
  return d;
}

SeriesContext sl4_klein_context() {
  RootDatum rd = pgl_datum(4);
  MatGroup w = weyl_group(rd);
  InertialDatum inert;
  inert.generators.push_back(TorusPoint({TorusCoord(Rat(1), Rat(1, 2)), TorusCoord(Rat(1), Rat(1, 2)),
                                         TorusCoord(Rat(1), Rat(1, 2))}));
  inert.generators.push_back(TorusPoint({TorusCoord(Rat(1), Rat(0)), TorusCoord(Rat(1), Rat(1, 2)),
                                         TorusCoord(Rat(1), Rat(0))}));
  WsResult r = compute_Ws(rd, w, inert, WsMode::stabilizer);
  return SeriesContext(r.h_datum, std::move(r.ws));
}

}  // namespace

TEST_CASE("building L-parameters") {
  SECTION("unramified twist of Steinberg on GL(2)") {
    LParameter p = build_phi(trivial_chi(2), mags({3, 3}), Partition{2});
    REQUIRE(p.h.exponents == std::vector<Int>{1, -1});
  }
  SECTION("trivial restriction to SL(2) for the all-ones partition") {
    LParameter p = build_phi(trivial_chi(3), mags({2, 3, 5}), Partition{1, 1, 1});
    REQUIRE(p.h.exponents == std::vector<Int>{0, 0, 0});
  }
  SECTION("Steinberg point: t = 1, regular nilpotent") {
    LParameter p = build_phi(trivial_chi(3), TorusPoint::one(3), Partition{3});
    REQUIRE(p.h.exponents == std::vector<Int>{2, 0, -2});
  }
  SECTION("rank mismatch throws") {
    REQUIRE_THROWS(build_phi(trivial_chi(2), mags({2, 3}), Partition{3}));
  }
}

TEST_CASE("evaluating L-parameters") {
  TorusCoord alpha(Rat(5), Rat(1, 3));
  SECTION("n = 0, trivial u, zero nilpotent: identity") {
    LParameter p = build_phi(trivial_chi(2), mags({2, 3}), Partition{1, 1});
    REQUIRE(eval_phi(p, {0}, 0, alpha) == TorusPoint::one(2));
  }
  SECTION("GL(2) Steinberg twist at n = 1") {
    LParameter p = build_phi(trivial_chi(2), mags({3, 3}), Partition{2});
    TorusPoint v = eval_phi(p, {0}, 1, alpha);
    REQUIRE(v.coords[0] == TorusCoord(Rat(15), Rat(1, 3)));
    REQUIRE(v.coords[1] == TorusCoord(Rat(3, 5), Rat(2, 3)));
  }
  SECTION("alpha = 1 gives chi-hat(u) t^n") {
    SeriesContext ctx = sl4_klein_context();
    InertialDatum chi;
    chi.generators.push_back(TorusPoint({TorusCoord(Rat(1), Rat(1, 2)), TorusCoord(Rat(1), Rat(1, 2)),
                                         TorusCoord(Rat(1), Rat(1, 2))}));
    TorusPoint t = mags({2, 3, 5});
    LParameter p{chi, t, Cocharacter{{Int(0), Int(0), Int(0)}}, Partition{1, 1, 1}};
    TorusPoint v = eval_phi(p, {1}, 2, TorusCoord::one());
    REQUIRE(v == t.pow(2) * chi.generators[0]);
  }
}

TEST_CASE("mu_assemble and the commutative diagram") {
  SECTION("generic t with the all-ones partition") {
    SeriesContext ctx = full_series_context(gl_datum(3));
    ReederParameter rp = mu_assemble(ctx, mags({2, 3, 5}), Partition{1, 1, 1}, 0, 0, trivial_chi(3));
    REQUIRE(rp.cell.is_lowest);
    for (const Int& e : rp.h) REQUIRE(e == 0);
  }
  SECTION("GL(3) with t = (z,z,w): regular per block") {
    SeriesContext ctx = full_series_context(gl_datum(3));
    ReederParameter rp = mu_assemble(ctx, mags({2, 2, 7}), Partition{2, 1}, 0, 0, trivial_chi(3));
    REQUIRE_FALSE(rp.cell.is_lowest);
  }
  SECTION("Steinberg parameter at the identity") {
    SeriesContext ctx = full_series_context(gl_datum(3));
    ReederParameter rp = mu_assemble(ctx, TorusPoint::one(3), Partition{3}, 0, 0, trivial_chi(3));
    REQUIRE(rp.h == std::vector<Int>{2, 0, -2});
    REQUIRE_FALSE(rp.cell.is_lowest);
  }
  SECTION("inconsistent labels are rejected") {
    SeriesContext ctx = full_series_context(gl_datum(3));
    REQUIRE_THROWS(mu_assemble(ctx, mags({2, 3, 5}), Partition{2, 1}, 0, 0, trivial_chi(3)));
    REQUIRE_THROWS(mu_assemble(ctx, TorusPoint::one(3), Partition{3}, 1, 0, trivial_chi(3)));
    REQUIRE_THROWS(mu_assemble(ctx, TorusPoint::one(3), Partition{3}, 0, 5, trivial_chi(3)));
  }
  SECTION("i_alpha after mu_assemble equals pi_alpha on the fiber") {
    SeriesContext ctx = full_series_context(gl_datum(3));
    std::vector<TorusCoord> alphas = {TorusCoord(Rat(2), Rat(0)), TorusCoord(Rat(1), Rat(1, 4)),
                                      TorusCoord(Rat(7, 3), Rat(1, 6))};
    for (const TorusPoint& t : {mags({2, 3, 5}), mags({3, 3, 5}), TorusPoint::one(3)}) {
      auto fiber = second_kind_fiber(ctx, t);
      for (const auto& pt : fiber) {
        std::vector<Partition> parts;
        for (const auto& b : pt.springer->x.blocks) parts.push_back(b.part);
        ReederParameter rp = mu_assemble_blocks(ctx, pt.t, parts, pt.springer->psi, trivial_chi(3));
        for (const auto& a : alphas) REQUIRE(i_alpha(ctx, rp, a) == pi_alpha(ctx, pt, a));
      }
    }
  }
}

TEST_CASE("pi_alpha behaviour") {
  SeriesContext ctx = full_series_context(gl_datum(2));
  SECTION("lowest cell: orbit of t for every alpha") {
    auto fiber = second_kind_fiber(ctx, mags({2, 3}));
    REQUIRE(fiber.size() == 1);
    for (const auto& a : {TorusCoord(Rat(2), Rat(0)), TorusCoord(Rat(1), Rat(1, 3))})
      REQUIRE(pi_alpha(ctx, fiber[0], a) == orbit_of(ctx, fiber[0].t));
  }
  SECTION("Steinberg cocharacter moves the point") {
    auto fiber = second_kind_fiber(ctx, mags({3, 3}));
    REQUIRE(fiber.size() == 2);
    TorusCoord alpha(Rat(2), Rat(0));
    // Point with regular nilpotent: t * h(alpha) = (3*2, 3/2).
    const SecondKindPoint& reg = fiber[0];
    REQUIRE(reg.springer->x.blocks[0].part == Partition{2});
    TorusPoint expect({TorusCoord(Rat(3, 2), Rat(0)), TorusCoord(Rat(6), Rat(0))});
    REQUIRE(pi_alpha(ctx, reg, alpha) == orbit_of(ctx, expect));
  }
  SECTION("alpha = 1 collapses every cell to the orbit of t") {
    auto fiber = second_kind_fiber(ctx, TorusPoint::one(2));
    for (const auto& pt : fiber)
      REQUIRE(pi_alpha(ctx, pt, TorusCoord::one()) == orbit_of(ctx, pt.t));
  }
}

TEST_CASE("cells partition the second-kind points") {
  SeriesContext ctx = full_series_context(gl_datum(2));
  SECTION("n = 2: exactly two cell labels") {
    std::set<std::string> keys;
    for (const TorusPoint& t : {mags({2, 3}), mags({3, 3}), TorusPoint::one(2)})
      for (const auto& pt : second_kind_fiber(ctx, t)) keys.insert(cell_of(ctx, pt).key);
    REQUIRE(keys.size() == 2);
  }
  SECTION("lowest cell contains the zero-nilpotent points only") {
    for (const auto& pt : second_kind_fiber(ctx, mags({5, 5}))) {
      CellLabel c = cell_of(ctx, pt);
      REQUIRE(c.is_lowest == pt.springer->x.is_zero());
    }
  }
}

TEST_CASE("L-packet equivalence") {
  SeriesContext ctx = full_series_context(gl_datum(3));
  SECTION("reflexive on every point of a fiber") {
    for (const auto& pt : second_kind_fiber(ctx, mags({2, 2, 7})))
      REQUIRE(lpacket_equiv(ctx, pt, pt));
  }
  SECTION("same point, different cells: never equivalent") {
    auto fiber = second_kind_fiber(ctx, TorusPoint::one(3));
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = i + 1; j < fiber.size(); ++j)
        if (cell_of(ctx, fiber[i]) != cell_of(ctx, fiber[j]))
          REQUIRE_FALSE(lpacket_equiv(ctx, fiber[i], fiber[j]));
  }
  SECTION("moving the point by the group stays in the packet") {
    TorusPoint t = mags({2, 2, 7});
    auto fiber = second_kind_fiber(ctx, t);
    for (int w = 0; w < ctx.ws.size(); ++w) {
      TorusPoint moved = ctx.cache.apply(w, t);
      auto fiber2 = second_kind_fiber(ctx, moved);
      REQUIRE(fiber2.size() == fiber.size());
      // Canonical representatives agree, so the fibers coincide pointwise.
      for (std::size_t i = 0; i < fiber.size(); ++i)
        REQUIRE(lpacket_equiv(ctx, fiber[i], fiber2[i]));
    }
  }
  SECTION("SL(4) example: packets are exactly the fibers") {
    SeriesContext ctx4 = sl4_klein_context();
    auto vertex = second_kind_fiber(ctx4, TorusPoint::one(3));
    REQUIRE(vertex.size() == 4);
    for (std::size_t i = 0; i < vertex.size(); ++i)
      for (std::size_t j = 0; j < vertex.size(); ++j)
        REQUIRE(lpacket_equiv(ctx4, vertex[i], vertex[j]));
    FixedLocusBuilder edge({ctx4.cache.torus_matrix(1)});
    auto ep = second_kind_fiber(ctx4, edge.point({0}, edge.generic_free_values()));
    REQUIRE(ep.size() == 2);
    REQUIRE(lpacket_equiv(ctx4, ep[0], ep[1]));
    REQUIRE_FALSE(lpacket_equiv(ctx4, ep[0], vertex[0]));
  }
}

TEST_CASE("rank-2 fibers use the springer tables") {
  SECTION("B2 at the identity: five decorated points") {
    SeriesContext ctx = full_series_context(b2_datum());
    auto pts = second_kind_fiber(ctx, TorusPoint::one(2));
    REQUIRE(pts.size() == 5);
    int lowest = 0, top = 0;
    for (const auto& pt : pts) {
      REQUIRE(pt.springer.has_value());
      REQUIRE(pt.springer->x.rank2_orbit.has_value());
      CellLabel c = cell_of(ctx, pt);
      if (c.is_lowest) ++lowest;
      if (c.key == "[5]") ++top;
    }
    REQUIRE(lowest == 1);
    REQUIRE(top == 1);
  }
  SECTION("G2 at the identity: six decorated points over five cells") {
    SeriesContext ctx = full_series_context(g2_datum());
    auto pts = second_kind_fiber(ctx, TorusPoint::one(2));
    REQUIRE(pts.size() == 6);
    std::set<std::string> cells;
    for (const auto& pt : pts) cells.insert(cell_of(ctx, pt).key);
    REQUIRE(cells.size() == 5);  // the subregular orbit carries two points
  }
  SECTION("cell fusion of an A1 stratum inside G2") {
    SeriesContext ctx = full_series_context(g2_datum());
    // Only the highest long root vanishes: t1^3 t2^2 = 1 with all other
    // root values distinct from 1.
    TorusPoint t({TorusCoord(Rat(4), Rat(0)), TorusCoord(Rat(1, 8), Rat(0))});
    auto pts = second_kind_fiber(ctx, t);
    REQUIRE(pts.size() == 2);
    std::set<std::string> cells;
    for (const auto& pt : pts) cells.insert(cell_of(ctx, pt).key);
    REQUIRE(cells.count("0") == 1);
    REQUIRE(cells.count("A1") == 1);  // regular of the long-root sl2
  }
  SECTION("cell fusion of short-root strata inside B2 with nontrivial pi0") {
    SeriesContext ctx = full_series_context(b2_datum());
    // t = (1, -1): the short root e1 vanishes, and the flip of the second
    // coordinate fixes t without any root vanishing for it.
    TorusPoint t({TorusCoord(Rat(1), Rat(0)), TorusCoord(Rat(1), Rat(1, 2))});
    StabilizerDecomposition d = levi_decompose(ctx.h, ctx.ws, ctx.canonical_point(t));
    REQUIRE(d.wt_order() == 4);
    REQUIRE(d.wm0_order() == 2);
    REQUIRE(d.pi0_order() == 2);
    auto pts = second_kind_fiber(ctx, t);
    REQUIRE(pts.size() == 4);
    std::set<std::string> cells;
    for (const auto& pt : pts) cells.insert(cell_of(ctx, pt).key);
    REQUIRE(cells.count("[1,1,1,1,1]") == 1);
    REQUIRE(cells.count("[3,1,1]") == 1);  // regular of the short-root sl2
    // Packets within the fiber never cross cells.
    for (const auto& a : pts)
      for (const auto& b : pts)
        if (lpacket_equiv(ctx, a, b)) REQUIRE(cell_of(ctx, a) == cell_of(ctx, b));
  }
  SECTION("long-root stratum inside B2 fuses to the minimal orbit") {
    SeriesContext ctx = full_series_context(b2_datum());
    TorusPoint t({TorusCoord(Rat(5), Rat(0)), TorusCoord(Rat(5), Rat(0))});
    auto pts = second_kind_fiber(ctx, t);
    REQUIRE(pts.size() == 2);
    std::set<std::string> cells;
    for (const auto& pt : pts) cells.insert(cell_of(ctx, pt).key);
    REQUIRE(cells.count("[2,2,1]") == 1);
  }
}

TEST_CASE("nontrivial pi0 labels at the order-2 central point of B2") {
  SeriesContext ctx = full_series_context(b2_datum());
  TorusPoint t({TorusCoord(Rat(1), Rat(1, 2)), TorusCoord(Rat(1), Rat(1, 2))});  // (-1,-1)
  StabilizerDecomposition d = levi_decompose(ctx.h, ctx.ws, ctx.canonical_point(t));
  // Both long roots vanish; the short reflections fix t without vanishing.
  REQUIRE(d.wt_order() == 8);
  REQUIRE(d.wm0_order() == 4);
  REQUIRE(d.pi0_order() == 2);

  auto pts = second_kind_fiber(ctx, t);
  REQUIRE(pts.size() == 5);  // = #Irr(W(B2)) through the twisted label set
  std::map<std::string, int> cell_counts;
  for (const auto& pt : pts) ++cell_counts[cell_of(ctx, pt).key];
  REQUIRE(cell_counts["[1,1,1,1,1]"] == 2);  // zero tuple, two psi labels
  REQUIRE(cell_counts["[3,1,1]"] == 2);      // regular on both long factors
  REQUIRE(cell_counts["[2,2,1]"] == 1);      // mixed tuple, swapped by pi0
  // The two points over the regular tuple share t, cell, and cocharacter,
  // so they sit in one packet (distinguished only by psi).
  std::vector<const SecondKindPoint*> reg;
  for (const auto& pt : pts)
    if (cell_of(ctx, pt).key == "[3,1,1]") reg.push_back(&pt);
  REQUIRE(reg.size() == 2);
  REQUIRE(lpacket_equiv(ctx, *reg[0], *reg[1]));
  REQUIRE(reg[0]->springer->psi != reg[1]->springer->psi);
}

TEST_CASE("W^s of a GL Levi stratum via roots mode") {
  RootDatum rd = gl_datum(4);
  MatGroup w = weyl_group(rd);
  InertialDatum chi;
  chi.generators.push_back(TorusPoint({TorusCoord(Rat(1), Rat(0)), TorusCoord(Rat(1), Rat(0)),
                                       TorusCoord(Rat(1), Rat(1, 2)), TorusCoord(Rat(1), Rat(1, 2))}));
  WsResult r = compute_Ws(rd, w, chi, WsMode::roots);
  // Roots e_i - e_j with chi_i = chi_j: an A1 x A1 inside A3.
  REQUIRE(r.rs_roots.size() == 4);
  REQUIRE(r.ws.size() == 4);
  // Here both modes agree: the pointwise stabilizer adds the block swap
  // only when the two characters coincide, which they do not.
  WsResult s = compute_Ws(rd, w, chi, WsMode::stabilizer);
  REQUIRE(s.ws.size() == 4);
}

TEST_CASE("mu_assemble separates labels over one point") {
  SeriesContext ctx = full_series_context(gl_datum(4));
  InertialDatum chi;
  chi.generators.push_back(TorusPoint::one(4));
  TorusPoint t = TorusPoint::one(4);
  std::vector<ReederParameter> params;
  for (const auto& lam : all_partitions(4))
    params.push_back(mu_assemble(ctx, t, lam, 0, 0, chi));
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      bool same = params[i].cell == params[j].cell && params[i].h == params[j].h &&
                  params[i].psi == params[j].psi;
      REQUIRE_FALSE(same);
    }
}

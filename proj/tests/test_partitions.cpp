#include <catch2/catch_amalgamated.hpp>

#include "exq/partitions.hpp"
#include "exq/springer.hpp"

using namespace exq;

TEST_CASE("partition basics") {
  Partition p{3, 1};
  REQUIRE(p.n() == 4);
  REQUIRE(p.transpose() == Partition{2, 1, 1});
  REQUIRE(Partition{4}.transpose() == Partition{1, 1, 1, 1});
  REQUIRE_THROWS(Partition{1, 3});
  REQUIRE(all_partitions(4).size() == 5);
  REQUIRE(all_partitions(6).size() == 11);
}

TEST_CASE("dominance order") {
  REQUIRE(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
  REQUIRE(dominance_leq(Partition{2, 1}, Partition{3}));
  REQUIRE(dominance_leq(Partition{1, 1, 1}, Partition{3}));
  SECTION("(3,3) and (4,1,1) are incomparable") {
    REQUIRE_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    REQUIRE_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
  }
  SECTION("reflexive and a partial order on partitions of 6") {
    auto ps = all_partitions(6);
    for (const auto& a : ps) REQUIRE(dominance_leq(a, a));
    for (const auto& a : ps)
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) REQUIRE(a == b);
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c)) REQUIRE(dominance_leq(a, c));
      }
  }
  SECTION("size mismatch throws") {
    REQUIRE_THROWS(dominance_leq(Partition{2}, Partition{2, 1}));
  }
}

TEST_CASE("murnaghan-nakayama values") {
  // S3: chi_(3) = trivial, chi_(1,1,1) = sign, chi_(2,1) = standard.
  REQUIRE(symmetric_character_value(Partition{3}, Partition{1, 1, 1}) == 1);
  REQUIRE(symmetric_character_value(Partition{3}, Partition{2, 1}) == 1);
  REQUIRE(symmetric_character_value(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  REQUIRE(symmetric_character_value(Partition{1, 1, 1}, Partition{3}) == 1);
  REQUIRE(symmetric_character_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  REQUIRE(symmetric_character_value(Partition{2, 1}, Partition{2, 1}) == 0);
  REQUIRE(symmetric_character_value(Partition{2, 1}, Partition{3}) == -1);
  SECTION("column orthogonality for S5") {
    auto ps = all_partitions(5);
    // sum over lambda of chi(mu)^2 = centralizer order of mu
    auto centralizer_order = [](const Partition& mu) {
      Int z = 1;
      int run = 1;
      for (std::size_t i = 0; i < mu.parts.size(); ++i) {
        z *= mu.parts[i];
        if (i + 1 < mu.parts.size() && mu.parts[i + 1] == mu.parts[i])
          ++run;
        else {
          for (int k = 2; k <= run; ++k) z *= k;
          run = 1;
        }
      }
      return z;
    };
    for (const auto& mu : ps) {
      Int s = 0;
      for (const auto& lam : ps) {
        Int v = symmetric_character_value(lam, mu);
        s += v * v;
      }
      REQUIRE(s == centralizer_order(mu));
    }
  }
}

TEST_CASE("springer labels in type A") {
  SECTION("zero nilpotent carries the trivial character") {
    REQUIRE(springer_A(Partition{1, 1, 1}) == Partition{3});
  }
  SECTION("regular nilpotent carries the sign character") {
    REQUIRE(springer_A(Partition{3}) == Partition{1, 1, 1});
  }
  SECTION("(2,1) carries the two-dimensional label") {
    REQUIRE(springer_A(Partition{2, 1}) == Partition{2, 1});
  }
  SECTION("bijective on partitions of n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      auto ps = all_partitions(n);
      std::vector<Partition> images;
      for (const auto& p : ps) images.push_back(springer_A(p));
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      REQUIRE(images.size() == ps.size());
    }
  }
}

TEST_CASE("jacobson-morozov exponents") {
  SECTION("single 2-block") {
    REQUIRE(jm_exponents(Partition{2}) == std::vector<Int>{1, -1});
  }
  SECTION("zero nilpotent") {
    REQUIRE(jm_exponents(Partition{1, 1}) == std::vector<Int>{0, 0});
  }
  SECTION("(3,1)") {
    REQUIRE(jm_exponents(Partition{3, 1}) == std::vector<Int>{2, 0, 0, -2});
  }
  SECTION("oracle: diagonal of the sl2 triple through a single Jordan block") {
    // e = superdiagonal Jordan block, h = diag(m-1, m-3, ...),
    // f determined by f_{i+1,i} = i(m-i); check [h,e] = 2e and [e,f] = h.
    for (int m = 1; m <= 6; ++m) {
      IntMatrix e(m, m), f(m, m), h(m, m);
      for (int i = 0; i + 1 < m; ++i) e.at(i, i + 1) = 1;
      for (int i = 0; i + 1 < m; ++i) f.at(i + 1, i) = Int(i + 1) * (m - i - 1);
      for (int i = 0; i < m; ++i) h.at(i, i) = m - 1 - 2 * i;
      IntMatrix he = h * e, eh = e * h;
      IntMatrix bracket_he = he - eh;
      IntMatrix two_e(m, m);
      for (int i = 0; i + 1 < m; ++i) two_e.at(i, i + 1) = 2;
      REQUIRE(bracket_he == two_e);
      IntMatrix ef = e * f, fe = f * e;
      REQUIRE(ef - fe == h);
      std::vector<Int> diag;
      for (int i = 0; i < m; ++i) diag.push_back(h.at(i, i));
      REQUIRE(jm_exponents(Partition{m}) == diag);
    }
  }
  SECTION("zero sum and negation symmetry for all partitions of n <= 8") {
    for (int n = 1; n <= 8; ++n)
      for (const auto& p : all_partitions(n)) {
        auto e = jm_exponents(p);
        Int s = 0;
        for (const Int& v : e) s += v;
        REQUIRE(s == 0);
        std::vector<Int> neg;
        for (auto it = e.rbegin(); it != e.rend(); ++it) neg.push_back(-*it);
        REQUIRE(neg == e);
      }
  }
}

TEST_CASE("rank-2 springer tables are well-formed") {
  for (auto kind : {SubsystemComponent::Kind::b2, SubsystemComponent::Kind::g2}) {
    const Rank2Table& t = rank2_springer_table(kind);
    // One pair per irreducible; zero orbit lowest with trivial h; regular
    // orbit h = sum of positive coroots.
    RootDatum rd = kind == SubsystemComponent::Kind::b2 ? b2_datum() : g2_datum();
    REQUIRE(t.orbits.front().closure_index == 0);
    for (const Int& e : t.orbits.front().h) REQUIRE(e == 0);
    std::vector<Int> two_rho_vee(rd.rank, Int(0));
    for (int i = 0; i < rd.num_roots(); ++i)
      if (rd.is_positive_root(i))
        for (int k = 0; k < rd.rank; ++k) two_rho_vee[k] += rd.coroots[i][k];
    REQUIRE(t.orbits.back().h == two_rho_vee);
    // dim B_x endpoints: regular 0, zero orbit = number of positive roots.
    REQUIRE(t.orbits.back().dim_bx == 0);
    REQUIRE(t.orbits.front().dim_bx == rd.num_roots() / 2);
  }
}

TEST_CASE("rank-2 pairs match rows of the computed character tables") {
  for (auto kind : {SubsystemComponent::Kind::b2, SubsystemComponent::Kind::g2}) {
    const Rank2Table& t = rank2_springer_table(kind);
    RootDatum rd = kind == SubsystemComponent::Kind::b2 ? b2_datum() : g2_datum();
    MatGroup w = weyl_group(rd);
    std::vector<int> all_roots(rd.num_roots());
    std::iota(all_roots.begin(), all_roots.end(), 0);
    auto comps = decompose_subsystem(rd, all_roots);
    REQUIRE(comps.size() == 1);
    CharTable ct = character_table(w);
    auto named = rank2_named_classes(t, rd, comps[0], w, ct.classes);
    std::vector<int> rows;
    for (const auto& pair : t.pairs) rows.push_back(rank2_pair_row(pair, ct, named));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    // The pairs exhaust Irr(W) exactly once.
    REQUIRE(static_cast<int>(rows.size()) == ct.num_irreducibles());
    // Zero orbit carries the trivial character, regular the sign character.
    auto named2 = rank2_named_classes(t, rd, comps[0], w, ct.classes);
    int triv_row = rank2_pair_row(t.pairs.front(), ct, named2);
    REQUIRE(triv_row == 0);
  }
}

TEST_CASE("springer fibre dimension endpoints in type A") {
  for (int n = 2; n <= 6; ++n) {
    REQUIRE(springer_fiber_dim_A(Partition{n}) == 0);
    // Zero nilpotent: the full flag variety, one dimension per positive root.
    REQUIRE(springer_fiber_dim_A(Partition(std::vector<int>(n, 1))) == Int(n) * (n - 1) / 2);
  }
}

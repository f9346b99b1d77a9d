#include <catch2/catch_amalgamated.hpp>

#include "exq/group.hpp"

using namespace exq;

namespace {

PermGroup symmetric_group(int n) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[i], t[i + 1]);
    gens.push_back(std::move(t));
  }
  return PermGroup(std::move(gens), PermOps(n));
}

PermGroup klein_four() {
  PermOps ops(4);
  return PermGroup({{1, 0, 3, 2}, {2, 3, 0, 1}}, ops);
}

}  // namespace

TEST_CASE("group closure") {
  SECTION("trivial group") {
    MatGroup g({}, MatOps(2));
    REQUIRE(g.size() == 1);
  }
  SECTION("swap matrix generates order 2") {
    MatGroup g({IntMatrix(2, 2, {0, 1, 1, 0})}, MatOps(2));
    REQUIRE(g.size() == 2);
  }
  SECTION("simple reflections of S4 on the rank-3 lattice close to order 24") {
    // s_i : x -> x - <x, a_i^vee> a_i on the A3 root lattice.
    std::vector<IntMatrix> gens = {
        IntMatrix(3, 3, {-1, 1, 0, 0, 1, 0, 0, 0, 1}),
        IntMatrix(3, 3, {1, 0, 0, 1, -1, 1, 0, 0, 1}),
        IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 1, -1}),
    };
    MatGroup g(gens, MatOps(3));
    REQUIRE(g.size() == 24);
  }
  SECTION("closure bound is enforced") {
    std::vector<IntMatrix> gens = {IntMatrix(2, 2, {0, 1, 1, 0})};
    REQUIRE_THROWS_AS(MatGroup(gens, MatOps(2), 1), GroupBoundExceeded);
  }
  SECTION("identity is element 0 and BFS order is deterministic") {
    PermGroup g = symmetric_group(3);
    REQUIRE(g.elem(0) == PermOps(3).identity());
    PermGroup h = symmetric_group(3);
    for (int i = 0; i < g.size(); ++i) REQUIRE(g.elem(i) == h.elem(i));
  }
}

TEST_CASE("conjugacy classes") {
  SECTION("klein four group: 4 singleton classes") {
    ConjClassSet c = conjugacy_classes(klein_four());
    REQUIRE(c.count() == 4);
    for (const auto& cl : c.classes) REQUIRE(cl.size() == 1);
  }
  SECTION("S3: classes of sizes 1, 3, 2") {
    ConjClassSet c = conjugacy_classes(symmetric_group(3));
    REQUIRE(c.count() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& cl : c.classes) sizes.push_back(cl.size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<std::size_t>{1, 2, 3});
  }
  SECTION("S4 has 5 classes") { REQUIRE(conjugacy_classes(symmetric_group(4)).count() == 5); }
  SECTION("representatives are least in class, identity class first") {
    ConjClassSet c = conjugacy_classes(symmetric_group(4));
    REQUIRE(c.representatives[0] == 0);
    for (int j = 0; j < c.count(); ++j) REQUIRE(c.representatives[j] == c.classes[j].front());
  }
}

TEST_CASE("centralizers") {
  PermGroup s3 = symmetric_group(3);
  SECTION("centralizer of the identity is the whole group") {
    REQUIRE(centralizer(s3, 0).size() == s3.size());
  }
  SECTION("centralizer of a transposition in S3 has order 2") {
    int t = s3.index_of({1, 0, 2});
    REQUIRE(centralizer(s3, t).size() == 2);
  }
  SECTION("centralizer of (12)(34) in S4 has order 8") {
    PermGroup s4 = symmetric_group(4);
    int t = s4.index_of({1, 0, 3, 2});
    REQUIRE(centralizer(s4, t).size() == 8);
  }
  SECTION("element outside the group throws") {
    REQUIRE_THROWS(s3.index_of({0, 1}));
  }
}

TEST_CASE("element orders and exponent") {
  PermGroup s4 = symmetric_group(4);
  REQUIRE(s4.element_order(0) == 1);
  REQUIRE(s4.exponent() == 12);
  REQUIRE_FALSE(s4.is_abelian());
  REQUIRE(klein_four().is_abelian());
}

#include <catch2/catch_amalgamated.hpp>

#include "exq/chartable.hpp"

using namespace exq;

namespace {

PermGroup cyclic_group(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup({c}, PermOps(n));
}

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

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
  CycField f(12);
  REQUIRE(f.degree() == 4);  // phi(12)
  auto z = f.root_power(1);
  auto z12 = f.root_power(12);
  REQUIRE(f.is_rational(z12, Rat(1)));
  // zeta^6 = -1
  REQUIRE(f.is_rational(f.root_power(6), Rat(-1)));
  // zeta * conj(zeta) = 1
  REQUIRE(f.is_rational(f.mul(z, f.conj(z)), Rat(1)));
  // 1 + zeta_3 + zeta_3^2 = 0
  auto z3 = f.root_power(4);
  auto s = f.add(f.one(), f.add(z3, f.mul(z3, z3)));
  REQUIRE(f.is_zero(s));
}

TEST_CASE("character table of Z/3") {
  CharTable t = character_table(cyclic_group(3));
  REQUIRE(t.num_irreducibles() == 3);
  REQUIRE(t.degrees == std::vector<Int>{1, 1, 1});
  REQUIRE(verify_char_table(t));
  // Values are cube roots of unity; the nontrivial rows take a primitive
  // value on a generator class.
  const CycField& f = *t.field;
  REQUIRE(f.order() == 3);
  int nontrivial_values = 0;
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j)
      if (!f.is_rational(t.rows[i][j], Rat(1))) ++nontrivial_values;
  REQUIRE(nontrivial_values == 4);
}

TEST_CASE("character table of the klein four group") {
  PermGroup v({{1, 0, 3, 2}, {2, 3, 0, 1}}, PermOps(4));
  CharTable t = character_table(v);
  REQUIRE(t.num_irreducibles() == 4);
  REQUIRE(t.degrees == std::vector<Int>{1, 1, 1, 1});
  REQUIRE(verify_char_table(t));
  // All values are +-1.
  for (const auto& row : t.rows)
    for (const auto& v2 : row)
      REQUIRE((t.field->is_rational(v2, Rat(1)) || t.field->is_rational(v2, Rat(-1))));
}

TEST_CASE("character table of S3 matches the classical table") {
  CharTable t = character_table(symmetric_group(3));
  REQUIRE(t.degrees == std::vector<Int>{1, 1, 2});
  REQUIRE(verify_char_table(t));
  const CycField& f = *t.field;
  // Row 0 trivial.
  for (int j = 0; j < 3; ++j) REQUIRE(f.is_rational(t.rows[0][j], Rat(1)));
  // Identify classes by size: 1 (identity), 3 (transpositions), 2 (3-cycles).
  int tcls = -1, ccls = -1;
  for (int j = 0; j < 3; ++j) {
    if (t.classes.classes[j].size() == 3) tcls = j;
    if (t.classes.classes[j].size() == 2) ccls = j;
  }
  // Sign character.
  REQUIRE(f.is_rational(t.rows[1][tcls], Rat(-1)));
  REQUIRE(f.is_rational(t.rows[1][ccls], Rat(1)));
  // Two-dimensional character.
  REQUIRE(f.is_rational(t.rows[2][tcls], Rat(0)));
  REQUIRE(f.is_rational(t.rows[2][ccls], Rat(-1)));
}

TEST_CASE("character tables of larger groups verify exactly") {
  SECTION("S4") {
    CharTable t = character_table(symmetric_group(4));
    REQUIRE(t.num_irreducibles() == 5);
    std::vector<Int> deg = t.degrees;
    std::sort(deg.begin(), deg.end());
    REQUIRE(deg == std::vector<Int>{1, 1, 2, 3, 3});
    REQUIRE(verify_char_table(t));
  }
  SECTION("Z/4 has cyclotomic values") {
    CharTable t = character_table(cyclic_group(4));
    REQUIRE(t.num_irreducibles() == 4);
    REQUIRE(verify_char_table(t));
  }
  SECTION("row count equals class count and degree sum of squares is the order") {
    for (int n = 2; n <= 5; ++n) {
      PermGroup g = symmetric_group(n);
      CharTable t = character_table(g);
      REQUIRE(t.num_irreducibles() == conjugacy_classes(g).count());
      Int s = 0;
      for (const Int& d : t.degrees) s += d * d;
      REQUIRE(s == g.size());
    }
  }
}

TEST_CASE("class count and degrees are invariant under generator relabeling") {
  PermGroup a = symmetric_group(4);
  // Same group closed from a different generating set.
  PermGroup b({{1, 0, 2, 3}, {3, 1, 2, 0}, {0, 2, 1, 3}}, PermOps(4));
  REQUIRE(a.size() == b.size());
  REQUIRE(conjugacy_classes(a).count() == conjugacy_classes(b).count());
  std::vector<Int> da = character_table(a).degrees;
  std::vector<Int> db = character_table(b).degrees;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  REQUIRE(da == db);
}

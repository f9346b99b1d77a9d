#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exq/chartable.hpp"
#include "exq/partitions.hpp"
#include "exq/rootdata.hpp"
#include "exq/weyl.hpp"

namespace exq {

// Springer correspondence in type A, in the normalization where the zero
// nilpotent carries the trivial character and the regular nilpotent the
// sign character: the orbit of Jordan type lambda is matched with the
// Specht label lambda' (transpose).
inline Partition springer_A(const Partition& lambda) { return lambda.transpose(); }

// Exponents of the Jacobson-Morozov cocharacter through a nilpotent of
// Jordan type lambda: each block of size m contributes m-1, m-3, ..., 1-m.
// Emitted weakly decreasing.
inline std::vector<Int> jm_exponents(const Partition& lambda) {
  std::vector<Int> out;
  for (int p : lambda.parts)
    for (int i = 0; i < p; ++i) out.push_back(p - 1 - 2 * i);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Springer-fibre dimension d(x) for type A blocks: n(lambda) = sum (i-1) l_i.
inline Int springer_fiber_dim_A(const Partition& lambda) {
  Int d = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) d += Int(i) * lambda.parts[i];
  return d;
}

// ---------------------------------------------------------------------------
// Hardcoded Springer tables for the rank-2 systems B2 and G2 (table data from
// the standard literature, stated in the same normalization as springer_A).
// Character rows are pinned by their integer values on named classes, each
// named class given as a word in the (short, long) simple reflections.

struct Rank2Orbit {
  std::string name;
  int closure_index;        // position in the linear closure chain, 0 = zero orbit
  std::vector<Int> h;       // cocharacter exponents in the built-in coordinates
  Int dim_bx;               // springer fibre dimension d(x)
};

struct Rank2Pair {
  int orbit;
  int local_system;              // 0 = trivial
  std::vector<Int> char_values;  // on the named classes, in table order
};

struct Rank2Table {
  SubsystemComponent::Kind kind;
  std::vector<std::vector<int>> class_words;  // words over {0 = short, 1 = long}
  std::vector<Rank2Orbit> orbits;
  std::vector<Rank2Pair> pairs;
};

inline const Rank2Table& b2_springer_table() {
  // Classes: e, -1, rotation of order 4, long reflection, short reflection.
  // Orbits of SO(5,C) by partition: 1^5 < 221 < 311 < 5.
  static const Rank2Table t = [] {
    Rank2Table t;
    t.kind = SubsystemComponent::Kind::b2;
    t.class_words = {{}, {0, 1, 0, 1}, {0, 1}, {1}, {0}};
    t.orbits = {
        {"[1,1,1,1,1]", 0, {Int(0), Int(0)}, 4},
        {"[2,2,1]", 1, {Int(1), Int(1)}, 2},
        {"[3,1,1]", 2, {Int(2), Int(0)}, 1},
        {"[5]", 3, {Int(4), Int(2)}, 0},
    };
    t.pairs = {
        {0, 0, {Int(1), Int(1), Int(1), Int(1), Int(1)}},     // trivial
        {1, 0, {Int(1), Int(1), Int(-1), Int(-1), Int(1)}},   // -1 on long reflections
        {2, 0, {Int(2), Int(-2), Int(0), Int(0), Int(0)}},    // reflection character
        {2, 1, {Int(1), Int(1), Int(-1), Int(1), Int(-1)}},   // -1 on short reflections
        {3, 0, {Int(1), Int(1), Int(1), Int(-1), Int(-1)}},   // sign
    };
    return t;
  }();
  return t;
}

inline const Rank2Table& g2_springer_table() {
  // Classes: e, -1, rotation of order 6, rotation of order 3, long
  // reflection, short reflection. Orbits: 0 < A1 < A1~ < G2(a1) < G2.
  // The split of the two order-3 linear assignments between A1 and G2(a1)
  // follows the same pattern as B2 (minimal orbit negative on long
  // reflections); the rank-2 tables are table data, not derived.
  static const Rank2Table t = [] {
    Rank2Table t;
    t.kind = SubsystemComponent::Kind::g2;
    t.class_words = {{}, {0, 1, 0, 1, 0, 1}, {0, 1}, {0, 1, 0, 1}, {1}, {0}};
    t.orbits = {
        {"0", 0, {Int(0), Int(0)}, 6},
        {"A1", 1, {Int(0), Int(1)}, 3},
        {"A1~", 2, {Int(1), Int(0)}, 2},
        {"G2(a1)", 3, {Int(0), Int(2)}, 1},
        {"G2", 4, {Int(2), Int(2)}, 0},
    };
    t.pairs = {
        {0, 0, {Int(1), Int(1), Int(1), Int(1), Int(1), Int(1)}},       // trivial
        {1, 0, {Int(1), Int(-1), Int(-1), Int(1), Int(-1), Int(1)}},    // -1 on long refl
        {2, 0, {Int(2), Int(2), Int(-1), Int(-1), Int(0), Int(0)}},     // 2-dim, -1 central
        {3, 0, {Int(2), Int(-2), Int(1), Int(-1), Int(0), Int(0)}},     // reflection char
        {3, 1, {Int(1), Int(-1), Int(-1), Int(1), Int(1), Int(-1)}},    // -1 on short refl
        {4, 0, {Int(1), Int(1), Int(1), Int(1), Int(-1), Int(-1)}},     // sign
    };
    return t;
  }();
  return t;
}

inline const Rank2Table& rank2_springer_table(SubsystemComponent::Kind kind) {
  switch (kind) {
    case SubsystemComponent::Kind::b2:
      return b2_springer_table();
    case SubsystemComponent::Kind::g2:
      return g2_springer_table();
    default:
      throw std::invalid_argument("no rank-2 table for this component kind");
  }
}

// Short/long simple reflection indices of a rank-2 component: the short
// simple is the one whose coroot pairs to +-3 (G2) or +-2 (B2) against the
// other simple root.
inline std::pair<int, int> rank2_short_long_simples(const RootDatum& rd,
                                                    const SubsystemComponent& comp) {
  if (comp.simple.size() != 2) throw std::invalid_argument("rank-2 component expected");
  int a = comp.simple[0], b = comp.simple[1];
  Int pab = RootDatum::pairing(rd.roots[a], rd.coroots[b]);
  Int pba = RootDatum::pairing(rd.roots[b], rd.coroots[a]);
  // <long, short^vee> has the larger absolute value.
  if (abs(pab) > abs(pba)) return {b, a};  // a long, b short
  return {a, b};
}

// Map the table's named classes to class indices of a character table of
// the component's reflection group.
template <class Classes>
std::vector<int> rank2_named_classes(const Rank2Table& table, const RootDatum& rd,
                                     const SubsystemComponent& comp, const MatGroup& w,
                                     const Classes& classes) {
  auto [s, l] = rank2_short_long_simples(rd, comp);
  IntMatrix ms = rd.reflection(s), ml = rd.reflection(l);
  std::vector<int> out;
  for (const auto& word : table.class_words) {
    IntMatrix m = IntMatrix::identity(rd.rank);
    for (int letter : word) m = m * (letter == 0 ? ms : ml);
    out.push_back(classes.class_of[w.index_of(m)]);
  }
  return out;
}

// Row of the character table matching a table pair, located by its values
// on the named classes.
inline int rank2_pair_row(const Rank2Pair& pair, const CharTable& ct,
                          const std::vector<int>& named_class_index) {
  const CycField& f = *ct.field;
  for (int r = 0; r < ct.num_irreducibles(); ++r) {
    bool match = true;
    for (std::size_t c = 0; c < named_class_index.size() && match; ++c)
      if (!f.is_rational(ct.rows[r][named_class_index[c]], Rat(pair.char_values[c]))) match = false;
    if (match) return r;
  }
  throw std::logic_error("rank-2 springer pair not found in character table");
}

}  // namespace exq

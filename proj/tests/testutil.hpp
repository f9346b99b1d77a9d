#pragma once

#include <numeric>
#include <vector>

#include "exq/clifford.hpp"
#include "exq/group.hpp"

namespace exqtest {

inline exq::PermGroup symmetric_group(int n) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[i], t[i + 1]);
    gens.push_back(std::move(t));
  }
  return exq::PermGroup(std::move(gens), exq::PermOps(n));
}

inline exq::PermGroup cyclic_group(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return exq::PermGroup({c}, exq::PermOps(n));
}

// (Z/2)^k on 2k points; generator i swaps points 2i, 2i+1.
inline exq::PermGroup elementary_abelian_two(int k) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> t(2 * k);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[2 * i], t[2 * i + 1]);
    gens.push_back(std::move(t));
  }
  return exq::PermGroup(std::move(gens), exq::PermOps(2 * k));
}

using PermSemidirect = exq::SemidirectDatum<exq::PermOps, exq::PermOps>;

// S3 as Z/3 acted on by Z/2 inversion.
inline PermSemidirect s3_datum() {
  exq::PermGroup g1 = cyclic_group(3);
  exq::PermGroup g = cyclic_group(2);
  int inv = g1.inv(g1.generator_indices()[0]);
  return PermSemidirect(std::move(g1), std::move(g), {{inv}});
}

// D4 (Weyl group of B2) as (Z/2)^2 acted on by the coordinate swap.
inline PermSemidirect d4_datum() {
  exq::PermGroup g1 = elementary_abelian_two(2);
  exq::PermGroup g = cyclic_group(2);
  std::vector<std::vector<int>> images{{g1.generator_indices()[1], g1.generator_indices()[0]}};
  return PermSemidirect(std::move(g1), std::move(g), images);
}

// S4 as the Klein four group acted on by S3 = GL(2, F2).
inline PermSemidirect s4_datum() {
  exq::PermGroup g1 = elementary_abelian_two(2);
  exq::PermGroup g = symmetric_group(3);
  int a = g1.generator_indices()[0], b = g1.generator_indices()[1];
  int ab = g1.mult(a, b);
  // (ab) swaps the basis vectors; (bc) fixes a and sends b to a+b.
  std::vector<std::vector<int>> images{{b, a}, {a, ab}};
  return PermSemidirect(std::move(g1), std::move(g), images);
}

// Hyperoctahedral-style (Z/2)^3 x| S3 permuting the three factors.
inline PermSemidirect hyperoctahedral3_datum() {
  exq::PermGroup g1 = elementary_abelian_two(3);
  exq::PermGroup g = symmetric_group(3);
  const std::vector<int> gens = g1.generator_indices();
  std::vector<std::vector<int>> images{{gens[1], gens[0], gens[2]}, {gens[0], gens[2], gens[1]}};
  return PermSemidirect(std::move(g1), std::move(g), images);
}

}  // namespace exqtest

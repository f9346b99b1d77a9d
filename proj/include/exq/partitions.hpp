#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exq/numeric.hpp"

namespace exq {

// Partition of n with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  void normalize() {
    for (int p : parts)
      if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }

  int n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  Partition transpose() const {
    if (parts.empty()) return {};
    std::vector<int> t(parts[0], 0);
    for (int p : parts)
      for (int i = 0; i < p; ++i) ++t[i];
    return Partition(std::move(t));
  }

  bool is_all_ones() const {
    for (int p : parts)
      if (p != 1) return false;
    return true;
  }
  bool is_single_row() const { return parts.size() <= 1; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Dominance order: a <= b iff all partial sums of a are <= those of b.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominance order needs equal size");
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

// Murnaghan-Nakayama: value of the irreducible character of S_n labelled by
// lambda (Specht convention: (n) trivial, (1^n) sign) on the class of cycle
// type mu. Border strips are removed on beta numbers: subtracting k from a
// beta number is legal when the result is fresh, and the sign counts the
// beta numbers jumped over.
inline Int symmetric_character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("character value needs |lambda| = |mu|");
  std::vector<int> beta;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beta.push_back(lambda.parts[i] + (len - 1 - i));
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<std::vector<int>, std::size_t>, Int> memo;
  auto rec = [&](auto&& self, std::vector<int> b, std::size_t pos) -> Int {
    if (pos == mu.parts.size()) return 1;
    auto key = std::make_pair(b, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int k = mu.parts[pos];
    Int total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int target = b[i] - k;
      if (target < 0) continue;
      if (std::binary_search(b.begin(), b.end(), target)) continue;
      int jumped = 0;
      for (int v : b)
        if (v > target && v < b[i]) ++jumped;
      std::vector<int> nb = b;
      nb[i] = target;
      std::sort(nb.begin(), nb.end());
      Int sign = jumped % 2 == 0 ? 1 : -1;
      total += sign * self(self, std::move(nb), pos + 1);
    }
    memo[key] = total;
    return total;
  };
  return rec(rec, beta, 0);
}

}  // namespace exq

#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "exq/numeric.hpp"

namespace exq {

// Exact arithmetic in Q(zeta_e), elements stored in the power basis
// 1, zeta, ..., zeta^{phi(e)-1} modulo the e-th cyclotomic polynomial.
class CycField {
 public:
  using Elt = std::vector<Rat>;

  explicit CycField(int e) : e_(e) {
    if (e < 1) throw std::invalid_argument("cyclotomic order must be positive");
    phi_ = cyclotomic_polynomial(e);
    deg_ = static_cast<int>(phi_.size()) - 1;
    // Reduced powers of zeta up to what multiplication and conjugation need.
    int need = std::max(2 * deg_ - 1, e_);
    zpow_.resize(need + 1);
    std::vector<Int> cur(1, Int(1));  // zeta^0
    for (int j = 0; j <= need; ++j) {
      zpow_[j] = cur;
      cur.insert(cur.begin(), Int(0));  // multiply by x
      reduce(cur);
    }
  }

  int order() const { return e_; }
  int degree() const { return deg_; }

  Elt zero() const { return Elt(deg_, Rat(0)); }
  Elt one() const { return from_rational(Rat(1)); }
  Elt from_rational(const Rat& r) const {
    Elt v(deg_, Rat(0));
    v[0] = r;
    return v;
  }
  // zeta_e^k
  Elt root_power(Int k) const {
    Int kk = k % e_;
    if (kk < 0) kk += e_;
    int j = static_cast<int>(kk);
    Elt v(deg_, Rat(0));
    for (std::size_t i = 0; i < zpow_[j].size(); ++i) v[i] = Rat(zpow_[j][i]);
    return v;
  }

  Elt add(const Elt& a, const Elt& b) const {
    Elt c = a;
    for (int i = 0; i < deg_; ++i) c[i] += b[i];
    return c;
  }
  Elt sub(const Elt& a, const Elt& b) const {
    Elt c = a;
    for (int i = 0; i < deg_; ++i) c[i] -= b[i];
    return c;
  }
  Elt scale(const Elt& a, const Rat& r) const {
    Elt c = a;
    for (int i = 0; i < deg_; ++i) c[i] *= r;
    return c;
  }
  Elt mul(const Elt& a, const Elt& b) const {
    std::vector<Rat> conv(2 * deg_ - 1, Rat(0));
    for (int i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < deg_; ++j) {
        if (b[j] == 0) continue;
        conv[i + j] += a[i] * b[j];
      }
    }
    Elt c(deg_, Rat(0));
    for (int i = 0; i < deg_ && i < static_cast<int>(conv.size()); ++i) c[i] = conv[i];
    for (int j = deg_; j < static_cast<int>(conv.size()); ++j) {
      if (conv[j] == 0) continue;
      for (std::size_t i = 0; i < zpow_[j].size(); ++i) c[i] += conv[j] * Rat(zpow_[j][i]);
    }
    return c;
  }
  // Complex conjugation zeta -> zeta^{-1}.
  Elt conj(const Elt& a) const {
    Elt c(deg_, Rat(0));
    for (int k = 0; k < deg_; ++k) {
      if (a[k] == 0) continue;
      int j = k == 0 ? 0 : e_ - k;
      for (std::size_t i = 0; i < zpow_[j].size(); ++i) c[i] += a[k] * Rat(zpow_[j][i]);
    }
    return c;
  }

  bool is_zero(const Elt& a) const {
    for (const Rat& r : a)
      if (r != 0) return false;
    return true;
  }
  bool is_rational(const Elt& a, const Rat& r) const {
    if (a[0] != r) return false;
    for (int i = 1; i < deg_; ++i)
      if (a[i] != 0) return false;
    return true;
  }

  // Deterministic total order used for canonical row sorting.
  static int compare(const Elt& a, const Elt& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  // Phi_e via exact division of x^e - 1 by the lower cyclotomic factors.
  static std::vector<Int> cyclotomic_polynomial(int e) {
    std::vector<Int> poly(e + 1, Int(0));
    poly[0] = -1;
    poly[e] = 1;
    for (int d = 1; d < e; ++d) {
      if (e % d != 0) continue;
      poly = poly_div_exact(poly, cyclotomic_polynomial(d));
    }
    return poly;
  }

 private:
  void reduce(std::vector<Int>& p) const {
    while (static_cast<int>(p.size()) > deg_) {
      Int lead = p.back();
      int top = static_cast<int>(p.size()) - 1;
      p.pop_back();
      if (lead == 0) continue;
      // x^top = x^{top-deg} * (x^deg - phi(x) + phi(x)) -> subtract lead * phi * x^{top-deg}
      for (int i = 0; i < deg_; ++i) p[top - deg_ + i] -= lead * phi_[i];
    }
    p.resize(deg_, Int(0));
  }

  static std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      Int c = rem[i + den.size() - 1];  // den is monic
      quot[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const Int& r : rem)
      if (r != 0) throw std::logic_error("inexact cyclotomic division");
    return quot;
  }

  int e_;
  int deg_;
  std::vector<Int> phi_;                // ascending, monic
  std::vector<std::vector<Int>> zpow_;  // zeta^j reduced, integer coords
};

}  // namespace exq

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// r^k for integer k; r must be nonzero when k < 0.
inline Rat pow(const Rat& r, const Int& k) {
  if (k == 0) return Rat(1);
  Int e = abs(k);
  Rat base = r;
  if (k < 0) {
    if (r == 0) throw std::domain_error("0 raised to negative power");
    base = Rat(den(r), num(r));
  }
  Rat out(1);
  Rat sq = base;
  Int m = e;
  while (m > 0) {
    if ((m & 1) != 0) out *= sq;
    m >>= 1;
    if (m > 0) sq *= sq;
  }
  return out;
}

// Reduce into [0,1).
inline Rat mod1(const Rat& r) {
  Int n = num(r), d = den(r);
  Int q = n / d;
  Int rem = n - q * d;
  if (rem < 0) rem += d;
  return Rat(rem, d);
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace exq

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "osr/errors.hpp"

namespace osr {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals via GMP. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Parses "p", "-p", or "p/q". Throws ParseError on malformed input or q = 0.
Rat rat_from_string(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Scales a rational vector to integer entries with content 1 and first
// nonzero entry positive. Zero vector maps to zero vector.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

inline bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Rat vec_sum(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x;
  return s;
}

}  // namespace osr

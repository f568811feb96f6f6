// Exact rational scalars. Thin aliases and helpers around GMP's mpq_class:
// every coefficient in the workbench is an arbitrary-precision rational kept
// in canonical form (reduced, positive denominator).
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwb {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "n" or "n/d" with optional sign. Throws on malformed input.
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q as a machine long; only valid when q is an integer that fits.
inline long to_long(const Rat& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("to_long: not a small integer: " + to_string(q));
  return q.get_num().get_si();
}

// gcd in Q: the largest positive rational dividing both with integer
// quotients. rat_gcd(0, b) = |b|.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Int num = gcd(Int(a.get_num() * b.get_den()), Int(b.get_num() * a.get_den()));
  Rat q(num, a.get_den() * b.get_den());
  q.canonicalize();
  return abs(q);
}

}  // namespace cwb

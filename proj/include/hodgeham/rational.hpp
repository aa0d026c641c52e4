#pragma once

#include <gmpxx.h>

#include <string>

namespace hodgeham {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) through arithmetic; only raw (num, den) construction needs an
// explicit canonicalize, which ratio() performs.
using Rational = mpq_class;

inline Rational ratio(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace hodgeham

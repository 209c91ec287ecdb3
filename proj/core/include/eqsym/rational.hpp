#ifndef EQSYM_RATIONAL_HPP
#define EQSYM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "eqsym/errors.hpp"

namespace eqsym {

/// Exact arbitrary-precision rational scalar. GMP keeps arithmetic results
/// in canonical reduced form; the helpers below canonicalize on entry.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "p" or "p/q" with an optional leading minus sign.
inline Rational rational_from_string(const std::string& s) {
  try {
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational: '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace eqsym

#endif

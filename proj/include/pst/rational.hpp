#pragma once

#include <gmpxx.h>

#include <string>

namespace pst {

/// Arbitrary-precision rational, always kept canonical by GMP.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace pst

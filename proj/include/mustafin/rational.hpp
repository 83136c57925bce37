#ifndef MUSTAFIN_RATIONAL_HPP
#define MUSTAFIN_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>

namespace mustafin {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational makeRational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool isZero(const Rational& r) { return sgn(r) == 0; }

/// Exact square root of a non-negative rational, if one exists.
inline std::optional<Rational> rationalSqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  Integer n = r.get_num(), d = r.get_den();
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return makeRational(sn, sd);
}

inline std::string toString(const Rational& r) { return r.get_str(); }

}  // namespace mustafin

#endif

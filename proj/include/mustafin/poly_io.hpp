#ifndef MUSTAFIN_POLY_IO_HPP
#define MUSTAFIN_POLY_IO_HPP

#include <string>

#include "mustafin/polynomial.hpp"

namespace mustafin {

/// Normative polynomial syntax: terms joined by `+`/`-`, integer or `a/b`
/// coefficients, `*` products, `^` powers, e.g. `3/2*p1_1_12^2*t - p2_1_13`.
/// Whitespace insignificant. parse(print(f)) == f exactly.
std::string printPolynomial(const Polynomial& f);
Polynomial parsePolynomial(const RingPtr& ring, const std::string& text);

}  // namespace mustafin

#endif

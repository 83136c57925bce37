#ifndef MUSTAFIN_GROEBNER_HPP
#define MUSTAFIN_GROEBNER_HPP

#include <vector>

#include "mustafin/polynomial.hpp"

namespace mustafin {

/// Buchberger with product and chain criteria and a degree-ordered pair
/// queue. Returns the unique reduced Gröbner basis (monic, tails reduced,
/// elements sorted by ascending leading monomial). Throws on mixed rings.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord);

/// Full normal form of f against a Gröbner basis for ord.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& gb,
                      const MonomialOrder& ord);

/// S-polynomial (used by tests to assert the Buchberger criterion).
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g,
                       const MonomialOrder& ord);

}  // namespace mustafin

#endif

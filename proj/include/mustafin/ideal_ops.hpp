#ifndef MUSTAFIN_IDEAL_OPS_HPP
#define MUSTAFIN_IDEAL_OPS_HPP

#include <map>
#include <vector>

#include "mustafin/ideal.hpp"

namespace mustafin {

/// Generators of I ∩ Q[remaining variables]: Gröbner basis under a
/// block-elimination order, keeping the elements free of the front set.
Ideal eliminate(const Ideal& I, const std::vector<int>& frontVars);

/// Like eliminate, but the result is mapped into `target` by variable name.
Ideal eliminateToRing(const Ideal& I, const std::vector<int>& frontVars,
                      const RingPtr& target);

/// I : f^∞ via the auxiliary-variable construction. A degrevlex divide-out
/// fast path is taken automatically when f is a single variable and the
/// generators are homogeneous in the standard grading.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// I : (vars)^∞ = ∩_v I : v^∞.
Ideal saturateByVariableIdeal(const Ideal& I, const std::vector<int>& vars);

Ideal intersect(const Ideal& I, const Ideal& J);

/// f ∈ √I (Rabinowitsch membership).
bool radicalContains(const Ideal& I, const Polynomial& f);

/// Exact ideal equality (reduced Gröbner bases coincide).
bool idealEqual(const Ideal& I, const Ideal& J);

/// √I = √J, decided generator-wise.
bool idealEqualRadical(const Ideal& I, const Ideal& J);

/// Affine Krull dimension of ring/I from the initial ideal; the unit ideal
/// reports -1.
int dimension(const Ideal& I);

/// Dimension as a multiprojective scheme: affine dimension minus one
/// scaling per block of the ring.
int projectiveDimension(const Ideal& I);

/// Hilbert function of the quotient by the initial ideal, per block
/// multidegree, for all multidegrees with every entry <= bound. Requires a
/// blocked ring and multihomogeneous generators.
std::map<std::vector<int>, long long> multigradedHilbert(const Ideal& I, int bound);

/// Single value of the multigraded Hilbert function.
long long hilbertValueAt(const Ideal& I, const std::vector<int>& multidegree);

}  // namespace mustafin

#endif

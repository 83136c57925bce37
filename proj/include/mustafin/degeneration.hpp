#ifndef MUSTAFIN_DEGENERATION_HPP
#define MUSTAFIN_DEGENERATION_HPP

#include <string>
#include <vector>

#include "mustafin/building.hpp"
#include "mustafin/flag.hpp"
#include "mustafin/ideal_ops.hpp"

namespace mustafin {

/// The Mustafin degeneration ideal over Q[t] and its special fiber.
struct DegenerationIdeal {
  FlagType flag;
  Configuration config;
  RingPtr ring;       // all Plücker blocks plus t
  RingPtr fiberRing;  // same blocks, no t
  Ideal flatIdeal;    // t-saturated and per-block irrelevant-saturated
  Ideal fiberIdeal;   // flatIdeal at t = 0, in fiberRing
  std::vector<std::string> provenance;  // generator audit trail
};

/// Cross-block 2x2 minors: per level, the cleared columns
/// compound(B_j,k)·p^{(j)} paired over all vertex pairs and row-subset
/// pairs; each cleared column is scaled by the minimal t-power making its
/// entries t-regular.
std::vector<Polynomial> crossMinorGenerators(const Configuration& config,
                                             const FlagType& flag,
                                             const RingPtr& ring,
                                             std::vector<std::string>* audit = nullptr);

DegenerationIdeal buildDegeneration(const Configuration& config,
                                    const FlagType& flag);

struct GenericFiberReport {
  bool ok;
  std::string witness;
};

/// Substitute random t = c != 0, pin vertex 1 to a random flag point, and
/// check the system forces a single point in every other block (dimension
/// = one scalar per block, multigraded degree 1).
GenericFiberReport genericFiberCheck(const DegenerationIdeal& D, uint64_t seed);

/// Proportionality binding of a block's variables to a fixed coordinate
/// vector: all 2x2 minors of (vars | coords).
std::vector<Polynomial> bindBlockToPoint(const RingPtr& ring,
                                         const std::vector<int>& vars,
                                         const std::vector<Rational>& coords);

}  // namespace mustafin

#endif

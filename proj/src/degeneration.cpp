#include "mustafin/degeneration.hpp"

#include <stdexcept>

#include "mustafin/poly_io.hpp"

namespace mustafin {

namespace {

// Linear form over Q[t] in one block's variables: coefficient per variable.
using QtColumnEntry = std::vector<QtPoly>;  // aligned with block vars

// Cleared column for one (vertex, level): entries of compound(B_j,k)·p^{(j)}
// with the minimal t-power scaling making every coefficient t-regular.
std::vector<QtColumnEntry> clearedColumn(const QtMatrix& compound,
                                         int blockSize) {
  // lcm of all denominators
  QtPoly lcm = QtPoly::constant(Rational(1));
  for (auto& row : compound)
    for (auto& ent : row) {
      if (ent.isZero()) continue;
      QtPoly g = QtPoly::gcd(lcm, ent.den());
      lcm = lcm * ent.den().dividedBy(g);
    }
  // scaled entries, then shift by the minimal valuation
  bool any = false;
  int minVal = 0;
  std::vector<QtColumnEntry> col(compound.size(), QtColumnEntry(blockSize));
  for (size_t r = 0; r < compound.size(); ++r)
    for (int s = 0; s < blockSize; ++s) {
      const QtRat& ent = compound[r][s];
      if (ent.isZero()) {
        col[r][s] = QtPoly::zero();
        continue;
      }
      QtPoly cleared = ent.num() * lcm.dividedBy(ent.den());
      if (!any || cleared.valuation() < minVal) minVal = cleared.valuation();
      any = true;
      col[r][s] = cleared;
    }
  for (auto& row : col)
    for (auto& c : row)
      if (!c.isZero()) c = c.shifted(-minVal);
  return col;
}

Polynomial columnEntryTimesVar(const RingPtr& ring, const QtColumnEntry& entry,
                               const std::vector<int>& blockVarIdx) {
  int tIdx = ring->paramIdx();
  std::vector<Term> terms;
  for (size_t s = 0; s < entry.size(); ++s) {
    const QtPoly& c = entry[s];
    if (c.isZero()) continue;
    for (int e = c.lowDegree(); e <= c.highDegree(); ++e) {
      if (isZero(c.coeff(e))) continue;
      if (e < 0) throw std::logic_error("uncleared Laurent coefficient");
      Monomial m(ring->varCount());
      m.e[blockVarIdx[s]] = 1;
      m.e[tIdx] = e;
      terms.push_back({std::move(m), c.coeff(e)});
    }
  }
  return Polynomial::fromTerms(ring, std::move(terms));
}

}  // namespace

std::vector<Polynomial> crossMinorGenerators(const Configuration& config,
                                             const FlagType& flag,
                                             const RingPtr& ring,
                                             std::vector<std::string>* audit) {
  int n = config.size();
  if (config.d < 2) throw std::invalid_argument("d must be >= 2");
  std::vector<Polynomial> gens;
  for (int lvl = 1; lvl <= flag.levels(); ++lvl) {
    int k = flag.ranks[lvl - 1];
    int blockSize = (int)subsetsLex(flag.d, k).size();
    // entries[j][row] is the row-th entry of vertex j's cleared column
    std::vector<std::vector<Polynomial>> entries(n);
    for (int j = 0; j < n; ++j) {
      // transported coordinates (A^{(j)})^{-1} p^{(j)}: coordinates transform
      // inversely to the basis, so this is compound(B_j, k) p^{(j)}
      QtMatrix comp = compoundMatrix(config.vertices[j].basis.m, k);
      auto col = clearedColumn(comp, blockSize);
      auto vars = blockVars(ring, j + 1, lvl);
      entries[j].reserve(blockSize);
      for (int row = 0; row < blockSize; ++row)
        entries[j].push_back(columnEntryTimesVar(ring, col[row], vars));
    }
    auto rowSubs = subsetsLex(blockSize, 2);
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = j1 + 1; j2 < n; ++j2)
        for (auto& rows : rowSubs) {
          Polynomial minor = entries[j1][rows[0]] * entries[j2][rows[1]] -
                             entries[j1][rows[1]] * entries[j2][rows[0]];
          if (minor.isZero()) continue;
          minor = minor.primitivePart();
          gens.push_back(minor);
          if (audit)
            audit->push_back("cross minor level " + std::to_string(lvl) +
                             " vertices " + std::to_string(j1 + 1) + "," +
                             std::to_string(j2 + 1) + " rows " +
                             std::to_string(rows[0]) + "," +
                             std::to_string(rows[1]) + ": " +
                             printPolynomial(minor));
        }
  }
  return gens;
}

DegenerationIdeal buildDegeneration(const Configuration& config,
                                    const FlagType& flag) {
  int n = config.size();
  RingPtr ring = plueckerRing(flag.d, flag, n, true);
  RingPtr fiberRing = plueckerRing(flag.d, flag, n, false);
  std::vector<std::string> audit;

  std::vector<Polynomial> gens = crossMinorGenerators(config, flag, ring, &audit);
  for (int j = 1; j <= n; ++j) {
    auto fg = flagIdealGenerators(ring, j, flag);
    for (auto& g : fg) {
      audit.push_back("flag relation vertex " + std::to_string(j) + ": " +
                      printPolynomial(g));
      gens.push_back(std::move(g));
    }
  }

  Ideal j0(ring, std::move(gens));
  Ideal flat = saturate(j0, Polynomial::variable(ring, ring->paramIdx()));
  audit.push_back("saturated by t");
  for (auto& b : ring->blocks()) {
    flat = saturateByVariableIdeal(flat, b.varIdx);
    audit.push_back("saturated by block (" + std::to_string(b.vertex) + "," +
                    std::to_string(b.level) + ")");
  }

  // special fiber: t -> 0, mapped into the t-free ring
  std::vector<Polynomial> fiberGens;
  for (auto& g : flat.generators()) {
    Polynomial f = g.substitute(ring->paramIdx(), Rational(0));
    if (!f.isZero()) fiberGens.push_back(f.mapToRing(fiberRing));
  }
  Ideal fiber(fiberRing, std::move(fiberGens));

  return DegenerationIdeal{flag,  config, ring, fiberRing,
                           std::move(flat), std::move(fiber), std::move(audit)};
}

std::vector<Polynomial> bindBlockToPoint(const RingPtr& ring,
                                         const std::vector<int>& vars,
                                         const std::vector<Rational>& coords) {
  if (vars.size() != coords.size())
    throw std::invalid_argument("binding size mismatch");
  std::vector<Polynomial> out;
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j) {
      // coords[j] * p_i - coords[i] * p_j
      Polynomial rel = Polynomial::variable(ring, vars[i]) * coords[j] -
                       Polynomial::variable(ring, vars[j]) * coords[i];
      if (!rel.isZero()) out.push_back(rel);
    }
  return out;
}

GenericFiberReport genericFiberCheck(const DegenerationIdeal& D, uint64_t seed) {
  Rng rng(seed);
  int n = D.config.size();
  if (n == 1) return {true, "single vertex: trivially the flag scheme"};
  // random nonzero rational t = c
  Rational c(0);
  while (isZero(c)) c = makeRational(rng.range(-4, 4));

  std::vector<Polynomial> gens;
  for (auto& g : D.flatIdeal.generators()) {
    Polynomial f = g.substitute(D.ring->paramIdx(), c);
    if (!f.isZero()) gens.push_back(f.mapToRing(D.fiberRing));
  }
  auto point = randomFlagPoint(D.flag, rng);
  for (int lvl = 1; lvl <= D.flag.levels(); ++lvl) {
    auto vars = blockVars(D.fiberRing, 1, lvl);
    auto bind = bindBlockToPoint(D.fiberRing, vars, point[lvl - 1]);
    gens.insert(gens.end(), bind.begin(), bind.end());
  }
  Ideal I(D.fiberRing, std::move(gens));
  // drop degenerate loci where a whole block vanishes (the binding relations
  // are vacuous on them and they carry spurious dimension)
  for (auto& b : D.fiberRing->blocks()) I = saturateByVariableIdeal(I, b.varIdx);
  int nblocks = (int)D.fiberRing->blocks().size();
  int dim = dimension(I);
  if (dim != nblocks)
    return {false, "fiber dimension " + std::to_string(dim) + ", expected " +
                       std::to_string(nblocks) + " at t = " + toString(c)};
  long long deg = hilbertValueAt(I, std::vector<int>(nblocks, 1));
  if (deg != 1)
    return {false, "fiber multidegree " + std::to_string(deg) + " at t = " +
                       toString(c)};
  return {true, ""};
}

}  // namespace mustafin

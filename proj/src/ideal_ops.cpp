#include "mustafin/ideal_ops.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace mustafin {

namespace {

std::string freshName(const PolyRing& ring, const std::string& base) {
  std::string name = base;
  int n = 0;
  while (ring.hasVar(name)) name = base + std::to_string(++n);
  return name;
}

std::vector<Polynomial> mapAll(const std::vector<Polynomial>& ps,
                               const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (auto& p : ps) out.push_back(p.mapToRing(target));
  return out;
}

bool allHomogeneousNoParam(const Ideal& I) {
  int param = I.ring()->paramIdx();
  for (auto& g : I.generators()) {
    if (!g.isHomogeneous()) return false;
    if (param >= 0 && g.uses(param)) return false;
  }
  return true;
}

// Divide-out saturation by one variable: valid when the generators are
// homogeneous in the standard grading and v is ranked last in degrevlex.
Ideal saturateVarFast(const Ideal& I, int v) {
  std::vector<int> ranking;
  for (int i = 0; i < I.ring()->varCount(); ++i)
    if (i != v) ranking.push_back(i);
  ranking.push_back(v);
  auto ord = MonomialOrder::degrevlexRanked(ranking);
  const auto& gb = I.groebner(ord);
  std::vector<Polynomial> out;
  for (auto& g : gb) {
    // divide by the largest v-power dividing g
    int pw = 1 << 30;
    for (auto& t : g.terms()) pw = std::min(pw, t.m.e[v]);
    if (pw > 0) {
      Monomial m(g.ring()->varCount());
      m.e[v] = pw;
      out.push_back(g.divideMonomial(m));
    } else {
      out.push_back(g);
    }
  }
  return Ideal(I.ring(), std::move(out));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& frontVars) {
  if (frontVars.empty()) return I;
  auto ord = MonomialOrder::elimination(frontVars);
  const auto& gb = I.groebner(ord);
  std::vector<Polynomial> out;
  for (auto& g : gb) {
    bool free = true;
    for (int v : frontVars)
      if (g.uses(v)) {
        free = false;
        break;
      }
    if (free) out.push_back(g);
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal eliminateToRing(const Ideal& I, const std::vector<int>& frontVars,
                      const RingPtr& target) {
  Ideal e = eliminate(I, frontVars);
  return Ideal(target, mapAll(e.generators(), target));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.isZero()) throw std::invalid_argument("saturation by zero");
  if (f.isConstant()) return I;
  // fast path: single variable, homogeneous generators
  if (f.termCount() == 1 && f.terms()[0].m.degree() == 1 &&
      allHomogeneousNoParam(I)) {
    int v = -1;
    for (int i = 0; i < f.ring()->varCount(); ++i)
      if (f.terms()[0].m.e[i] == 1) v = i;
    return saturateVarFast(I, v);
  }
  auto ring2 = I.ring()->extended({freshName(*I.ring(), "_sat")});
  int y = ring2->varCount() - 1;
  std::vector<Polynomial> gens = mapAll(I.generators(), ring2);
  Polynomial yf = Polynomial::variable(ring2, y) * f.mapToRing(ring2);
  gens.push_back(Polynomial::constant(ring2, Rational(1)) - yf);
  Ideal ext(ring2, std::move(gens));
  return eliminateToRing(ext, {y}, I.ring());
}

Ideal saturateByVariableIdeal(const Ideal& I, const std::vector<int>& vars) {
  if (vars.empty()) throw std::invalid_argument("empty variable set");
  Ideal acc;
  bool first = true;
  for (int v : vars) {
    Ideal s = saturate(I, Polynomial::variable(I.ring(), v));
    if (first) {
      acc = s;
      first = false;
    } else {
      acc = intersect(acc, s);
    }
  }
  return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->sameVars(*J.ring()))
    throw std::invalid_argument("intersect: different rings");
  if (I.isZeroIdeal()) return I;
  if (J.isZeroIdeal()) return J;
  auto ring2 = I.ring()->extended({freshName(*I.ring(), "_mix")});
  int w = ring2->varCount() - 1;
  Polynomial pw = Polynomial::variable(ring2, w);
  Polynomial omw = Polynomial::constant(ring2, Rational(1)) - pw;
  std::vector<Polynomial> gens;
  for (auto& f : I.generators())
    if (!f.isZero()) gens.push_back(pw * f.mapToRing(ring2));
  for (auto& g : J.generators())
    if (!g.isZero()) gens.push_back(omw * g.mapToRing(ring2));
  Ideal ext(ring2, std::move(gens));
  return eliminateToRing(ext, {w}, I.ring());
}

bool radicalContains(const Ideal& I, const Polynomial& f) {
  if (f.isZero()) return true;
  if (I.contains(f)) return true;
  auto ring2 = I.ring()->extended({freshName(*I.ring(), "_rab")});
  int z = ring2->varCount() - 1;
  std::vector<Polynomial> gens = mapAll(I.generators(), ring2);
  gens.push_back(Polynomial::constant(ring2, Rational(1)) -
                 Polynomial::variable(ring2, z) * f.mapToRing(ring2));
  Ideal ext(ring2, std::move(gens));
  return ext.isUnit();
}

bool idealEqual(const Ideal& I, const Ideal& J) {
  if (!I.ring()->sameVars(*J.ring())) return false;
  const auto& a = I.groebner(MonomialOrder::degrevlex());
  const auto& b = J.groebner(MonomialOrder::degrevlex());
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool idealEqualRadical(const Ideal& I, const Ideal& J) {
  if (idealEqual(I, J)) return true;
  for (auto& f : I.generators())
    if (!radicalContains(J, f)) return false;
  for (auto& g : J.generators())
    if (!radicalContains(I, g)) return false;
  return true;
}

namespace {

int maxIndependent(const std::vector<uint64_t>& supports, uint64_t allowed,
                   std::unordered_map<uint64_t, int>& memo) {
  auto it = memo.find(allowed);
  if (it != memo.end()) return it->second;
  // find a leading-monomial support inside the allowed set
  uint64_t bad = 0;
  bool found = false;
  for (uint64_t s : supports) {
    if ((s & ~allowed) == 0) {
      bad = s;
      found = true;
      break;
    }
  }
  int result;
  if (!found) {
    result = __builtin_popcountll(allowed);
  } else {
    result = 0;
    uint64_t rest = bad;
    while (rest) {
      uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      result = std::max(result, maxIndependent(supports, allowed & ~bit, memo));
    }
  }
  memo.emplace(allowed, result);
  return result;
}

}  // namespace

int dimension(const Ideal& I) {
  if (I.ring()->varCount() > 63)
    throw std::invalid_argument("dimension: too many variables");
  const auto& gb = I.groebner(MonomialOrder::degrevlex());
  if (gb.size() == 1 && gb[0].isOne()) return -1;
  auto ord = MonomialOrder::degrevlex();
  std::vector<uint64_t> supports;
  for (auto& g : gb) supports.push_back(g.leadingTerm(ord).m.supportMask());
  uint64_t all = (I.ring()->varCount() == 63)
                     ? ~(uint64_t)0 >> 1
                     : (((uint64_t)1 << I.ring()->varCount()) - 1);
  std::unordered_map<uint64_t, int> memo;
  return maxIndependent(supports, all, memo);
}

int projectiveDimension(const Ideal& I) {
  int d = dimension(I);
  if (d < 0) return d;
  int nblocks = (int)I.ring()->blocks().size();
  return d - nblocks;
}

namespace {

// Count monomials with the exact block multidegree that are not divisible
// by any of the given leading monomials.
long long countStandard(const RingPtr& ring,
                        const std::vector<Monomial>& lms,
                        const std::vector<int>& multideg) {
  const auto& blocks = ring->blocks();
  Monomial current(ring->varCount());
  long long count = 0;
  // recurse block by block, variable by variable
  std::function<void(size_t, size_t, int)> rec = [&](size_t b, size_t vi,
                                                     int remaining) {
    if (b == blocks.size()) {
      for (auto& lm : lms)
        if (lm.divides(current)) return;
      ++count;
      return;
    }
    const auto& idx = blocks[b].varIdx;
    if (vi == idx.size()) {
      if (remaining == 0)
        rec(b + 1, 0, b + 1 < blocks.size() ? multideg[b + 1] : 0);
      return;
    }
    if (vi + 1 == idx.size()) {
      current.e[idx[vi]] = remaining;
      rec(b, vi + 1, 0);
      current.e[idx[vi]] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current.e[idx[vi]] = e;
      rec(b, vi + 1, remaining - e);
    }
    current.e[idx[vi]] = 0;
  };
  rec(0, 0, blocks.empty() ? 0 : multideg[0]);
  return count;
}

std::vector<Monomial> leadingMonomials(const Ideal& I) {
  if (!I.isMultihomogeneous())
    throw std::invalid_argument("multigraded Hilbert: non-multihomogeneous input");
  const auto& blocks = I.ring()->blocks();
  for (auto& g : I.generators()) {
    uint64_t blockVars = 0;
    for (auto& b : blocks)
      for (int v : b.varIdx) blockVars |= (uint64_t)1 << v;
    if ((g.supportMask() & ~blockVars) != 0)
      throw std::invalid_argument(
          "multigraded Hilbert: generator uses a non-block variable");
  }
  auto ord = MonomialOrder::degrevlex();
  std::vector<Monomial> lms;
  for (auto& g : I.groebner(ord)) lms.push_back(g.leadingTerm(ord).m);
  return lms;
}

}  // namespace

std::map<std::vector<int>, long long> multigradedHilbert(const Ideal& I,
                                                         int bound) {
  auto lms = leadingMonomials(I);
  const auto& blocks = I.ring()->blocks();
  std::map<std::vector<int>, long long> table;
  std::vector<int> deg(blocks.size(), 0);
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == blocks.size()) {
      table[deg] = countStandard(I.ring(), lms, deg);
      return;
    }
    for (int s = 0; s <= bound; ++s) {
      deg[b] = s;
      rec(b + 1);
    }
    deg[b] = 0;
  };
  rec(0);
  return table;
}

long long hilbertValueAt(const Ideal& I, const std::vector<int>& multidegree) {
  auto lms = leadingMonomials(I);
  if (multidegree.size() != I.ring()->blocks().size())
    throw std::invalid_argument("multidegree length mismatch");
  return countStandard(I.ring(), lms, multidegree);
}

}  // namespace mustafin

#include "mustafin/components.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "mustafin/poly_io.hpp"

namespace mustafin {

namespace {

Ideal saturateAllBlocks(Ideal I) {
  for (auto& b : I.ring()->blocks()) I = saturateByVariableIdeal(I, b.varIdx);
  return I;
}

// After binding some blocks to points and saturating, the locus is a single
// point per block exactly when the affine dimension is one scalar per block
// and the multidegree at (1,...,1) is 1.
bool singlePointPerBlock(const Ideal& I) {
  int nb = (int)I.ring()->blocks().size();
  if (dimension(I) != nb) return false;
  return hilbertValueAt(I, std::vector<int>(nb, 1)) == 1;
}

// Difference-of-squares split of a binomial with coprime monomials.
std::optional<std::pair<Polynomial, Polynomial>> trySquareSplit(
    const Polynomial& g) {
  if (g.termCount() != 2) return std::nullopt;
  const Term& t0 = g.terms()[0];
  const Term& t1 = g.terms()[1];
  for (int e : t0.m.e)
    if (e % 2 != 0) return std::nullopt;
  for (int e : t1.m.e)
    if (e % 2 != 0) return std::nullopt;
  if (sgn(t0.c) * sgn(t1.c) >= 0) return std::nullopt;
  auto sa = rationalSqrt(abs(t0.c));
  auto sb = rationalSqrt(abs(t1.c));
  if (!sa || !sb) return std::nullopt;
  Monomial u = t0.m, v = t1.m;
  for (auto& e : u.e) e /= 2;
  for (auto& e : v.e) e /= 2;
  Polynomial pu = Polynomial::term(g.ring(), u, *sa);
  Polynomial pv = Polynomial::term(g.ring(), v, *sb);
  return std::make_pair(pu - pv, pu + pv);
}

// Split g = f1(vars in S) * f2(vars outside S) when g, viewed as a
// polynomial in the S-variables, has pairwise proportional coefficients.
std::optional<std::pair<Polynomial, Polynomial>> trySeparate(
    const Polynomial& g, const std::vector<char>& inS) {
  const RingPtr& ring = g.ring();
  int nv = ring->varCount();
  std::map<std::vector<int>, std::vector<Term>> parts;
  for (auto& t : g.terms()) {
    std::vector<int> key(nv, 0);
    Monomial rest(nv);
    for (int i = 0; i < nv; ++i) {
      if (inS[i])
        key[i] = t.m.e[i];
      else
        rest.e[i] = t.m.e[i];
    }
    parts[key].push_back({rest, t.c});
  }
  if (parts.size() < 2) return std::nullopt;
  Polynomial f2;
  std::vector<Term> f1terms;
  for (auto& [key, terms] : parts) {
    Polynomial c = Polynomial::fromTerms(ring, terms);
    if (f2.isZero()) f2 = c.primitivePart();
    Rational ratio = c.terms()[0].c / f2.terms()[0].c;
    if (c != f2 * ratio) return std::nullopt;
    f1terms.push_back({Monomial(key), ratio});
  }
  if (f2.isConstant()) return std::nullopt;
  Polynomial f1 = Polynomial::fromTerms(ring, std::move(f1terms));
  if (f1.isConstant()) return std::nullopt;
  return std::make_pair(f1.primitivePart(), f2);
}

// Distinct factors of f whose product has the same vanishing locus as f:
// the variables of the monomial content, plus the monomial-free part, split
// further as a difference of squares or a product of polynomials in
// disjoint block (or vertex) variable sets.
void splitInto(const Polynomial& g, std::vector<Polynomial>& out, int depth) {
  const RingPtr& ring = g.ring();
  if (g.isZero() || g.isConstant()) return;
  if (depth > 16) {
    out.push_back(g);
    return;
  }
  Monomial content = g.monomialContent();
  if (!content.isOne()) {
    for (int i = 0; i < (int)content.e.size(); ++i)
      if (content.e[i] > 0) out.push_back(Polynomial::variable(ring, i));
    splitInto(g.divideMonomial(content), out, depth + 1);
    return;
  }
  if (auto sq = trySquareSplit(g)) {
    splitInto(sq->first, out, depth + 1);
    splitInto(sq->second, out, depth + 1);
    return;
  }
  // separation across block boundaries, then across whole vertices
  uint64_t support = g.supportMask();
  std::vector<std::vector<char>> groups;
  std::map<int, std::vector<char>> vertexGroup;
  for (auto& b : ring->blocks()) {
    std::vector<char> inS(ring->varCount(), 0);
    bool touches = false;
    for (int v : b.varIdx) {
      inS[v] = 1;
      if (support >> v & 1) touches = true;
    }
    if (!touches) continue;
    groups.push_back(inS);
    auto& vg = vertexGroup[b.vertex];
    if (vg.empty()) vg.assign(ring->varCount(), 0);
    for (int v : b.varIdx) vg[v] = 1;
  }
  for (auto& [vtx, vg] : vertexGroup) groups.push_back(vg);
  for (auto& inS : groups) {
    if (auto sep = trySeparate(g, inS)) {
      splitInto(sep->first, out, depth + 1);
      splitInto(sep->second, out, depth + 1);
      return;
    }
  }
  out.push_back(g);
}

std::vector<Polynomial> splitFactors(const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.isZero() || f.isConstant()) return out;
  splitInto(f, out, 0);
  return out;
}

bool splitUseful(const Polynomial& f, const std::vector<Polynomial>& fac) {
  if (fac.size() >= 2) return true;
  if (fac.size() == 1) return !(fac[0].primitivePart() == f.primitivePart());
  return false;
}

// Q ⊆ √P, generator-wise.
bool radicalContainsIdeal(const Ideal& P, const Ideal& Q) {
  for (auto& g : Q.generators())
    if (!radicalContains(P, g)) return false;
  return true;
}

std::string basisKey(const std::vector<Polynomial>& gb) {
  std::string k;
  for (auto& g : gb) {
    k += printPolynomial(g);
    k += ';';
  }
  return k;
}

// All elementary divisors of the integer row span are 0 or ±1, i.e. the
// quotient lattice is torsion-free (diagonalization by row/column moves).
bool latticeSaturated(std::vector<std::vector<long long>> m) {
  size_t rows = m.size();
  if (rows == 0) return true;
  size_t cols = m[0].size();
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // repeat pivoting until row r / column c are clear outside the pivot
    while (true) {
      size_t pr = r, pc = c;
      long long best = 0;
      for (size_t i = r; i < rows; ++i)
        for (size_t j = c; j < cols; ++j) {
          long long a = m[i][j] < 0 ? -m[i][j] : m[i][j];
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) return true;  // remaining block zero
      std::swap(m[r], m[pr]);
      for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        long long q = m[i][c] / m[r][c];
        if (q != 0)
          for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      for (size_t j = c + 1; j < cols; ++j) {
        long long q = m[r][j] / m[r][c];
        if (q != 0)
          for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) clean = false;
      }
      if (clean) break;
    }
    long long piv = m[r][c] < 0 ? -m[r][c] : m[r][c];
    if (piv != 1) return false;
    ++r;
    ++c;
  }
  return true;
}

void note(std::vector<std::string>* evidence, const std::string& s) {
  if (evidence) evidence->push_back(s);
}

}  // namespace

std::string labelName(Label l) {
  switch (l) {
    case Label::Primary: return "primary";
    case Label::Secondary: return "secondary";
    case Label::Mixed: return "mixed";
    case Label::TertiaryUnresolved: return "tertiary-unresolved";
  }
  return "?";
}

std::vector<Ideal> minimalPrimes(const Ideal& I) {
  if (I.isUnit()) throw std::invalid_argument("minimalPrimes of the unit ideal");
  const RingPtr& ring = I.ring();
  auto ord = MonomialOrder::degrevlex();
  std::vector<Ideal> leaves;
  std::set<std::string> seen;

  std::function<void(const Ideal&, int)> split = [&](const Ideal& J, int depth) {
    if (depth > 64) throw std::runtime_error("factor splitting depth exceeded");
    const auto& gb = J.groebner(ord);
    if (gb.size() == 1 && gb[0].isOne()) return;
    if (!seen.insert(basisKey(gb)).second) return;
    for (auto& g : gb) {
      auto fac = splitFactors(g);
      if (!splitUseful(g, fac)) continue;
      // branch i keeps the locus where fac[i] is the first vanishing factor:
      // saturating by the earlier factors only keeps the branches covering,
      // even where several factors vanish at once
      for (size_t i = 0; i < fac.size(); ++i) {
        std::vector<Polynomial> gens(gb.begin(), gb.end());
        gens.push_back(fac[i]);
        Ideal Ji(ring, std::move(gens));
        for (size_t k = 0; k < i; ++k) Ji = saturate(Ji, fac[k]);
        if (!Ji.isUnit()) split(Ji, depth + 1);
      }
      return;
    }
    // no factorable element: candidate prime leaf, irrelevant-saturated
    Ideal L(ring, std::vector<Polynomial>(gb.begin(), gb.end()));
    if (!ring->blocks().empty()) L = saturateAllBlocks(std::move(L));
    if (!L.isUnit()) leaves.push_back(std::move(L));
  };
  split(I, 0);

  if (leaves.empty())
    throw std::runtime_error("decomposition produced no components");

  // minimality: drop leaves whose radical contains another leaf
  std::vector<char> keep(leaves.size(), 1);
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t j = 0; j < leaves.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (!radicalContainsIdeal(leaves[i], leaves[j])) continue;
      // leaves[j] ⊆ √leaves[i]: i is redundant unless they are radical-equal
      // and i comes first
      if (radicalContainsIdeal(leaves[j], leaves[i]) && i < j) continue;
      keep[i] = 0;
      break;
    }
  }
  std::vector<Ideal> primes;
  for (size_t i = 0; i < leaves.size(); ++i)
    if (keep[i]) primes.push_back(std::move(leaves[i]));

  // validation: the intersection of the leaves must have radical √I
  Ideal meet = primes[0];
  for (size_t i = 1; i < primes.size(); ++i) meet = intersect(meet, primes[i]);
  if (!idealEqualRadical(meet, I))
    throw std::runtime_error(
        "decomposition validation failed: component intersection does not "
        "match the input radical");
  return primes;
}

Confidence primalityConfidence(const Ideal& leaf) {
  const auto& gb = leaf.groebner(MonomialOrder::degrevlex());
  std::vector<std::vector<long long>> lattice;
  for (auto& g : gb) {
    if (g.termCount() == 1) {
      if (g.terms()[0].m.degree() != 1) return Confidence::Heuristic;
    } else if (g.termCount() == 2) {
      const Term& a = g.terms()[0];
      const Term& b = g.terms()[1];
      if (abs(a.c) != 1 || abs(b.c) != 1) return Confidence::Heuristic;
      if (!a.m.coprime(b.m)) return Confidence::Heuristic;
      std::vector<long long> v(a.m.e.size());
      for (size_t i = 0; i < v.size(); ++i)
        v[i] = (long long)a.m.e[i] - (long long)b.m.e[i];
      lattice.push_back(std::move(v));
    } else {
      return Confidence::Heuristic;
    }
  }
  if (lattice.empty()) return Confidence::Certified;
  return latticeSaturated(std::move(lattice)) ? Confidence::Certified
                                              : Confidence::Heuristic;
}

bool isPrimaryFor(const Ideal& component, int vertexIdx,
                  const DegenerationIdeal& D, uint64_t seed,
                  std::vector<std::string>* evidence) {
  const RingPtr& ring = D.fiberRing;
  std::vector<char> own(ring->varCount(), 0);
  for (int v : vertexVars(ring, vertexIdx)) own[v] = 1;
  std::vector<int> front;
  for (int i = 0; i < ring->varCount(); ++i)
    if (!own[i]) front.push_back(i);
  Ideal elim = eliminate(component, front);
  Ideal flagJ(ring, flagIdealGenerators(ring, vertexIdx, D.flag));
  if (!idealEqualRadical(elim, flagJ)) {
    note(evidence, "vertex L" + std::to_string(vertexIdx) +
                       ": projection onto the block is not the full flag "
                       "variety");
    return false;
  }
  note(evidence, "vertex L" + std::to_string(vertexIdx) +
                     ": dominates its flag variety");

  int votes = 0;
  for (int s = 0; s < 3; ++s) {
    Rng rng(seed + 1000003ULL * (uint64_t)s + 7919ULL * (uint64_t)vertexIdx);
    auto point = randomFlagPoint(D.flag, rng);
    std::vector<Polynomial> gens = component.generators();
    for (int lvl = 1; lvl <= D.flag.levels(); ++lvl) {
      auto bind = bindBlockToPoint(ring, blockVars(ring, vertexIdx, lvl),
                                   point[lvl - 1]);
      gens.insert(gens.end(), bind.begin(), bind.end());
    }
    Ideal J = saturateAllBlocks(Ideal(ring, std::move(gens)));
    if (singlePointPerBlock(J)) ++votes;
  }
  note(evidence, "vertex L" + std::to_string(vertexIdx) +
                     ": degree-1 fiber votes " + std::to_string(votes) + "/3" +
                     (votes != 0 && votes != 3 ? " (inconclusive)" : ""));
  return votes >= 2;
}

namespace {

// Solve for the unique point of the component over a random flag point in
// vertex j's blocks: bind, saturate, dehomogenize each block at a
// non-vanishing witness variable, and read the coordinates off the normal
// forms. Returns one value per ring variable, or nothing when the solve is
// inconclusive (non-constant normal forms).
std::optional<std::vector<Rational>> pointThroughVertex(
    const Ideal& component, const DegenerationIdeal& D, int vertexIdx,
    uint64_t seed) {
  const RingPtr& ring = D.fiberRing;
  Rng rng(seed);
  auto point = randomFlagPoint(D.flag, rng);
  std::vector<Polynomial> gens = component.generators();
  for (int lvl = 1; lvl <= D.flag.levels(); ++lvl) {
    auto bind = bindBlockToPoint(ring, blockVars(ring, vertexIdx, lvl),
                                 point[lvl - 1]);
    gens.insert(gens.end(), bind.begin(), bind.end());
  }
  Ideal J = saturateAllBlocks(Ideal(ring, std::move(gens)));
  if (!singlePointPerBlock(J)) return std::nullopt;
  for (auto& b : ring->blocks()) {
    int witness = -1;
    for (int v : b.varIdx)
      if (!radicalContains(J, Polynomial::variable(ring, v))) {
        witness = v;
        break;
      }
    if (witness < 0) return std::nullopt;
    auto g2 = J.generators();
    g2.push_back(Polynomial::variable(ring, witness) -
                 Polynomial::constant(ring, Rational(1)));
    J = Ideal(ring, std::move(g2));
    if (J.isUnit()) return std::nullopt;
  }
  auto ord = MonomialOrder::degrevlex();
  const auto& gb = J.groebner(ord);
  std::vector<Rational> vals(ring->varCount(), Rational(0));
  for (int v = 0; v < ring->varCount(); ++v) {
    Polynomial nf = normalForm(Polynomial::variable(ring, v), gb, ord);
    if (!nf.isConstant()) return std::nullopt;
    if (!nf.isZero()) vals[v] = nf.terms()[0].c;
  }
  return vals;
}

}  // namespace

std::optional<ProjectionMatch> matchUnderVertexProjection(
    const Ideal& component, const DegenerationIdeal& larger,
    const DegenerationIdeal& smaller,
    const std::vector<Ideal>& targetComponents, uint64_t seed,
    std::vector<std::string>* evidence) {
  int N = larger.config.size();
  int n = smaller.config.size();
  if (n > N) throw std::invalid_argument("target configuration is larger");
  if (larger.flag.d != smaller.flag.d || larger.flag.ranks != smaller.flag.ranks)
    throw std::invalid_argument("flag types differ");
  for (int i = 0; i < n; ++i)
    if (!vertexEqual(larger.config.vertices[i], smaller.config.vertices[i]))
      throw std::invalid_argument(
          "target configuration is not a prefix of the source");

  std::vector<int> extra;
  for (int j = n + 1; j <= N; ++j) {
    auto vv = vertexVars(larger.fiberRing, j);
    extra.insert(extra.end(), vv.begin(), vv.end());
  }
  Ideal img = eliminateToRing(component, extra, smaller.fiberRing);

  int idx = -1;
  for (size_t k = 0; k < targetComponents.size(); ++k)
    if (idealEqualRadical(img, targetComponents[k])) {
      idx = (int)k;
      break;
    }
  if (idx < 0) {
    note(evidence, "vertex projection image is not a component");
    return std::nullopt;
  }
  note(evidence, "vertex projection image equals target component " +
                     std::to_string(idx));

  // parametrize the source component through a vertex it is primary for
  int jv = -1;
  for (int j = N; j >= 1; --j)
    if (isPrimaryFor(component, j, larger, seed)) {
      jv = j;
      break;
    }
  if (jv < 0) {
    note(evidence, "no parametrizing vertex found; birationality undecided");
    return ProjectionMatch{idx, false};
  }

  int votes = 0, attempts = 0;
  for (int s = 0; s < 3; ++s) {
    auto pt = pointThroughVertex(component, larger, jv,
                                 seed + 101ULL * (uint64_t)s + 13ULL);
    if (!pt) continue;
    ++attempts;
    std::vector<Polynomial> gens = component.generators();
    for (int j = 1; j <= n; ++j)
      for (int lvl = 1; lvl <= larger.flag.levels(); ++lvl) {
        auto bv = blockVars(larger.fiberRing, j, lvl);
        std::vector<Rational> coords;
        coords.reserve(bv.size());
        for (int v : bv) coords.push_back((*pt)[v]);
        auto bind = bindBlockToPoint(larger.fiberRing, bv, coords);
        gens.insert(gens.end(), bind.begin(), bind.end());
      }
    Ideal J = saturateAllBlocks(Ideal(larger.fiberRing, std::move(gens)));
    if (singlePointPerBlock(J)) ++votes;
  }
  if (attempts < 3)
    note(evidence, "point extraction inconclusive on " +
                       std::to_string(3 - attempts) + "/3 seeds");
  if (votes != 0 && votes != attempts)
    note(evidence, "birational fiber votes " + std::to_string(votes) + "/" +
                       std::to_string(attempts) + " (inconclusive)");
  bool birational = attempts > 0 && 2 * votes > attempts;
  note(evidence, std::string("birationality verdict: ") +
                     (birational ? "birational" : "not birational"));
  return ProjectionMatch{idx, birational};
}

namespace {

struct VertexLabel {
  Vertex v;
  std::string name;
};

std::optional<VertexLabel> labelOfComponent(const ComponentReport& r,
                                            const Configuration& config) {
  if (r.label == Label::Primary && r.primaryVertex >= 1)
    return VertexLabel{config.vertices[r.primaryVertex - 1],
                       "L" + std::to_string(r.primaryVertex)};
  if (r.label == Label::Secondary && r.secondaryVertex)
    return VertexLabel{*r.secondaryVertex, r.secondaryVertex->str()};
  return std::nullopt;
}

FlagType makeSubFlag(const FlagType& flag, const std::vector<int>& levels) {
  std::vector<int> ranks;
  for (int l : levels) ranks.push_back(flag.ranks[l - 1]);
  return FlagType::make(flag.d, std::move(ranks));
}

}  // namespace

// Eliminate the dropped levels' variables and transport the image into the
// sub-flag degeneration's ring (blocks correspond positionally: the lex
// order on Plücker subsets is shared).
Ideal projectToSubflag(const Ideal& component, const DegenerationIdeal& D,
                       const DegenerationIdeal& Dsub,
                       const std::vector<int>& levels) {
  const RingPtr& ring = D.fiberRing;
  const RingPtr& sub = Dsub.fiberRing;
  std::vector<int> varMap(ring->varCount(), -1);
  int n = D.config.size();
  for (int j = 1; j <= n; ++j)
    for (size_t q = 0; q < levels.size(); ++q) {
      auto bv = blockVars(ring, j, levels[q]);
      auto bw = blockVars(sub, j, (int)q + 1);
      for (size_t i = 0; i < bv.size(); ++i) varMap[bv[i]] = bw[i];
    }
  std::vector<int> front;
  for (int i = 0; i < ring->varCount(); ++i)
    if (varMap[i] < 0) front.push_back(i);
  Ideal img = eliminate(component, front);
  std::vector<Polynomial> gens;
  for (auto& g : img.generators()) {
    std::vector<Term> terms;
    for (auto& t : g.terms()) {
      Monomial m(sub->varCount());
      for (int i = 0; i < ring->varCount(); ++i)
        if (t.m.e[i] > 0) m.e[varMap[i]] = t.m.e[i];
      terms.push_back({std::move(m), t.c});
    }
    gens.push_back(Polynomial::fromTerms(sub, std::move(terms)));
  }
  return Ideal(sub, std::move(gens));
}

Decomposition classify(const DegenerationIdeal& D, const ClassifyOptions& opts) {
  Decomposition dec;
  dec.input = D.fiberIdeal;
  auto primes = minimalPrimes(D.fiberIdeal);
  dec.validated = true;
  int n = D.config.size();
  const RingPtr& ring = D.fiberRing;

  for (auto& p : primes) {
    ComponentReport r;
    r.prime = p;
    r.projectiveDim = projectiveDimension(p);
    r.confidence = primalityConfidence(p);
    dec.components.push_back(std::move(r));
  }
  int count = (int)dec.components.size();

  // primary pass
  std::vector<int> primaryOf(n + 1, -1);
  for (int ci = 0; ci < count; ++ci) {
    auto& comp = dec.components[ci];
    for (int j = 1; j <= n; ++j) {
      std::vector<std::string> ev;
      if (isPrimaryFor(comp.prime, j, D, opts.seed, &ev)) {
        comp.label = Label::Primary;
        comp.primaryVertex = j;
        comp.evidence.insert(comp.evidence.end(), ev.begin(), ev.end());
        if (primaryOf[j] >= 0)
          throw std::runtime_error("two components primary for vertex L" +
                                   std::to_string(j));
        primaryOf[j] = ci;
        break;
      }
    }
  }
  for (int j = 1; j <= n; ++j)
    if (primaryOf[j] < 0)
      dec.notes.push_back("no primary component found for vertex L" +
                          std::to_string(j));

  std::vector<int> open;
  for (int ci = 0; ci < count; ++ci)
    if (dec.components[ci].label != Label::Primary) open.push_back(ci);

  if (!open.empty()) {
    int r = D.flag.levels();

    // flag projections to proper sub-flag types (singletons first, pairs
    // only for longer flags); each yields a vertex label when the image is
    // a labeled component of the smaller degeneration
    struct Sub {
      std::vector<int> levels;
      FlagType flag;
      DegenerationIdeal D;
      Decomposition dec;
    };
    std::vector<Sub> subs;
    if (r >= 2) {
      std::vector<std::vector<int>> levelSets;
      for (int t = 1; t <= r; ++t) levelSets.push_back({t});
      if (r > 2)
        for (int t1 = 1; t1 <= r; ++t1)
          for (int t2 = t1 + 1; t2 <= r; ++t2) levelSets.push_back({t1, t2});
      for (auto& ls : levelSets) {
        Sub s;
        s.levels = ls;
        s.flag = makeSubFlag(D.flag, ls);
        s.D = buildDegeneration(D.config, s.flag);
        s.dec = classify(s.D, opts);
        subs.push_back(std::move(s));
      }
    }

    // per open component: collect vertex labels of projection images
    std::vector<std::optional<Vertex>> loneCandidate(count);
    std::vector<char> needsFullScan(count, 0);
    std::vector<char> scanRuledOut(count, 0);
    for (int ci : open) {
      auto& comp = dec.components[ci];
      std::vector<std::pair<size_t, VertexLabel>> hits;
      for (size_t si = 0; si < subs.size(); ++si) {
        Ideal img = projectToSubflag(comp.prime, D, subs[si].D, subs[si].levels);
        int k = -1;
        for (size_t t = 0; t < subs[si].dec.components.size(); ++t)
          if (idealEqualRadical(img, subs[si].dec.components[t].prime)) {
            k = (int)t;
            break;
          }
        if (k < 0) {
          comp.evidence.push_back("flag projection to " + subs[si].flag.str() +
                                  ": image is not a component");
          continue;
        }
        auto lab = labelOfComponent(subs[si].dec.components[k], D.config);
        if (!lab) {
          comp.evidence.push_back("flag projection to " + subs[si].flag.str() +
                                  ": onto an unlabeled component");
          continue;
        }
        comp.evidence.push_back("flag projection to " + subs[si].flag.str() +
                                ": onto the component of vertex " + lab->name);
        hits.push_back({si, *lab});
      }
      // two distinct vertex labels make the component mixed
      bool mixed = false;
      for (size_t a = 0; a < hits.size() && !mixed; ++a)
        for (size_t b = a + 1; b < hits.size() && !mixed; ++b)
          if (!vertexEqual(hits[a].second.v, hits[b].second.v)) {
            comp.label = Label::Mixed;
            comp.mixed = MixedEvidence{subs[hits[a].first].flag,
                                       subs[hits[b].first].flag,
                                       hits[a].second.name,
                                       hits[b].second.name};
            mixed = true;
          }
      if (mixed) continue;
      if (!hits.empty()) {
        // single consistent label: a secondary component could only
        // correspond to this vertex; a label inside the configuration rules
        // the secondary case out entirely
        const VertexLabel& lab = hits[0].second;
        bool inConfig = false;
        for (auto& g : D.config.vertices)
          if (vertexEqual(lab.v, g)) inConfig = true;
        if (inConfig) {
          scanRuledOut[ci] = 1;
          comp.evidence.push_back(
              "projections land on a configuration vertex's component only; "
              "secondary case excluded");
        } else {
          loneCandidate[ci] = lab.v;
        }
      } else {
        needsFullScan[ci] = 1;
      }
    }

    // candidate pool for unguided scans
    std::optional<std::vector<Vertex>> pool;
    auto candidatePool = [&]() -> const std::vector<Vertex>& {
      if (!pool) {
        auto cs = secondaryCandidates(D.config, opts.candidateRadius);
        auto distToGamma = [&](const Vertex& v) {
          int best = INT_MAX;
          for (auto& g : D.config.vertices)
            best = std::min(best, adjacencyAndDistance(v, g).distance);
          return best;
        };
        std::stable_sort(cs.begin(), cs.end(),
                         [&](const Vertex& a, const Vertex& b) {
                           int da = distToGamma(a), db = distToGamma(b);
                           if (da != db) return da < db;
                           if (a.diag && b.diag) return a.diag->a < b.diag->a;
                           return a.str() < b.str();
                         });
        if ((int)cs.size() > opts.maxCandidates) cs.resize(opts.maxCandidates);
        pool = std::move(cs);
      }
      return *pool;
    };

    // scans: for candidate L, decompose Γ ∪ {L} once (cached) and test
    // whether its L-primary component maps birationally onto the component
    std::vector<Ideal> targetPrimes;
    for (auto& c : dec.components) targetPrimes.push_back(c.prime);
    struct ScanData {
      DegenerationIdeal D;
      std::vector<Ideal> primes;
      int lPrimaryIdx;
    };
    std::map<std::string, ScanData> scanCache;
    auto scanAgainst = [&](int ci, const std::vector<Vertex>& cands)
        -> std::optional<Vertex> {
      auto& comp = dec.components[ci];
      for (auto& L : cands) {
        std::string key = L.str();
        auto it = scanCache.find(key);
        if (it == scanCache.end()) {
          std::vector<Vertex> verts = D.config.vertices;
          verts.push_back(L);
          Configuration cfg2;
          try {
            cfg2 = Configuration::make(D.config.d, std::move(verts));
          } catch (const std::invalid_argument&) {
            continue;  // candidate coincides with a configuration vertex
          }
          DegenerationIdeal D2 = buildDegeneration(cfg2, D.flag);
          std::vector<Ideal> p2 = minimalPrimes(D2.fiberIdeal);
          int li = -1;
          for (size_t k = 0; k < p2.size(); ++k)
            if (isPrimaryFor(p2[k], n + 1, D2, opts.seed)) {
              li = (int)k;
              break;
            }
          it = scanCache
                   .emplace(key, ScanData{std::move(D2), std::move(p2), li})
                   .first;
        }
        if (it->second.lPrimaryIdx < 0) continue;
        std::vector<std::string> ev;
        auto m = matchUnderVertexProjection(
            it->second.primes[it->second.lPrimaryIdx], it->second.D, D,
            targetPrimes, opts.seed, &ev);
        if (m && m->componentIdx == ci && m->birational) {
          comp.evidence.push_back("secondary scan: candidate " + key +
                                  " parametrizes the component");
          comp.evidence.insert(comp.evidence.end(), ev.begin(), ev.end());
          return L;
        }
      }
      return std::nullopt;
    };

    for (int ci : open) {
      auto& comp = dec.components[ci];
      if (comp.label != Label::TertiaryUnresolved) continue;  // became Mixed
      std::optional<Vertex> found;
      if (loneCandidate[ci]) {
        found = scanAgainst(ci, {*loneCandidate[ci]});
      } else if (needsFullScan[ci] || (r == 1 && !scanRuledOut[ci])) {
        found = scanAgainst(ci, candidatePool());
      }
      if (found) {
        comp.label = Label::Secondary;
        comp.secondaryVertex = *found;
      } else if (!loneCandidate[ci] && !needsFullScan[ci] && r >= 2 &&
                 !scanRuledOut[ci]) {
        // had a consistent non-configuration label but the scan was not run;
        // nothing to do (loneCandidate covers this branch)
      }
    }
  }

  // dual graph: components meet unless their joint locus is irrelevant
  // (some block's variables all lie in the radical of the sum)
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      std::vector<Polynomial> gens = dec.components[i].prime.generators();
      auto& gj = dec.components[j].prime.generators();
      gens.insert(gens.end(), gj.begin(), gj.end());
      Ideal sum(ring, std::move(gens));
      bool irrelevant = false;
      for (auto& b : ring->blocks()) {
        bool all = true;
        for (int v : b.varIdx)
          if (!radicalContains(sum, Polynomial::variable(ring, v))) {
            all = false;
            break;
          }
        if (all) {
          irrelevant = true;
          break;
        }
      }
      if (!irrelevant) dec.dualGraphEdges.push_back({i, j});
    }

  // consistency: mixed components never carry a secondary label (enforced
  // by construction); record the final tallies
  int nPrim = 0, nSec = 0, nMix = 0, nTer = 0;
  for (auto& c : dec.components) {
    switch (c.label) {
      case Label::Primary: ++nPrim; break;
      case Label::Secondary: ++nSec; break;
      case Label::Mixed: ++nMix; break;
      case Label::TertiaryUnresolved: ++nTer; break;
    }
  }
  dec.notes.push_back("components: " + std::to_string(count) + " (primary " +
                      std::to_string(nPrim) + ", secondary " +
                      std::to_string(nSec) + ", mixed " + std::to_string(nMix) +
                      ", unresolved " + std::to_string(nTer) + ")");
  return dec;
}

CountBounds countBounds(const FlagType& flag, int n) {
  CountBounds b{n, std::nullopt};
  if (n == 2) {
    std::vector<int> parts;
    int prev = 0;
    for (int k : flag.ranks) {
      parts.push_back(k - prev);
      prev = k;
    }
    parts.push_back(flag.d - prev);
    long long v = 1;
    for (int i = 2; i <= flag.d; ++i) v *= i;
    for (int p : parts)
      for (int i = 2; i <= p; ++i) v /= i;
    b.upper = v;
  }
  return b;
}

StructuralReport structuralChecks(const DegenerationIdeal& D,
                                  const Decomposition& dec) {
  StructuralReport rep;
  int expected = D.flag.flagDimension();
  rep.dimensionsOk = true;
  for (size_t i = 0; i < dec.components.size(); ++i)
    if (dec.components[i].projectiveDim != expected) {
      rep.dimensionsOk = false;
      rep.failures.push_back(
          "component " + std::to_string(i) + " has projective dimension " +
          std::to_string(dec.components[i].projectiveDim) + ", expected " +
          std::to_string(expected));
    }

  // connectedness of the dual graph
  int count = (int)dec.components.size();
  std::vector<char> seen(count, 0);
  if (count > 0) {
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto& e : dec.dualGraphEdges) {
        int w = -1;
        if (e.first == u) w = e.second;
        if (e.second == u) w = e.first;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  rep.connected = std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
  if (!rep.connected) rep.failures.push_back("dual graph is disconnected");

  CountBounds cb = countBounds(D.flag, D.config.size());
  rep.countWithinBounds = count >= cb.lower && (!cb.upper || count <= *cb.upper);
  if (!rep.countWithinBounds)
    rep.failures.push_back("component count " + std::to_string(count) +
                           " outside bounds");

  // reducedness in the multiplicity-free cases: n <= 2, projective space,
  // or full flags in dimension 3
  int n = D.config.size();
  bool tableCase = n <= 2 || D.flag.ranks == std::vector<int>{1} ||
                   (D.flag.ranks == std::vector<int>{1, 2} && D.flag.d == 3);
  if (tableCase && count > 0) {
    Ideal meet = dec.components[0].prime;
    for (int i = 1; i < count; ++i)
      meet = intersect(meet, dec.components[i].prime);
    rep.reducedInTableCase = idealEqual(meet, dec.input);
    if (!*rep.reducedInTableCase)
      rep.failures.push_back(
          "fiber ideal differs from the intersection of its minimal primes");
  }
  return rep;
}

std::vector<ExperimentRow> generalPositionExperiment(const FlagType& flag,
                                                     int trials,
                                                     uint64_t seed) {
  long long bound = *countBounds(flag, 2).upper;
  int d = flag.d;
  std::vector<ExperimentRow> rows;
  for (int t = 0; t < trials; ++t) {
    uint64_t s = seed + (uint64_t)t;
    Rng rng(s);
    Configuration cfg;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100)
        throw std::runtime_error("could not sample a distinct configuration");
      QtMatrix m(d, std::vector<QtRat>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          m[i][j] = QtRat(QtPoly({makeRational(rng.range(-2, 2)),
                                  makeRational(rng.range(-2, 2))},
                                 0));
      try {
        Vertex v2 = Vertex::fromBasis(LatticeBasis::fromMatrix(std::move(m)));
        Vertex v1 =
            Vertex::apartment(ApartmentVertex::normalized(std::vector<int>(d, 0)));
        cfg = Configuration::make(d, {std::move(v1), std::move(v2)});
        break;
      } catch (const std::invalid_argument&) {
        continue;  // singular matrix or duplicate vertex: resample
      }
    }
    auto D = buildDegeneration(cfg, flag);
    auto primes = minimalPrimes(D.fiberIdeal);
    rows.push_back({s, (int)primes.size(), bound});
  }
  return rows;
}

}  // namespace mustafin

#include "mustafin/groebner.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace mustafin {

namespace {

// Terms sorted strictly descending under the active order.
using OrdTerms = std::vector<Term>;

OrdTerms toOrd(const Polynomial& p, const MonomialOrder& ord) {
  OrdTerms t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  return t;
}

Polynomial fromOrd(const RingPtr& ring, const OrdTerms& t) {
  return Polynomial::fromTerms(ring, t);
}

// Ordered accumulator: terms keyed by monomial, largest first, coefficients
// updated in place so reduction steps cost |g| map operations instead of a
// full rebuild of the partially reduced polynomial.
struct OrdCmp {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->greater(a, b);
  }
};
using TermMap = std::map<Monomial, Rational, OrdCmp>;

TermMap toMap(const OrdTerms& f, const MonomialOrder& ord) {
  TermMap m(OrdCmp{&ord});
  for (auto& t : f) m.emplace(t.m, t.c);
  return m;
}

OrdTerms reduceMap(TermMap work, const std::vector<OrdTerms>& basis,
                   const MonomialOrder& ord) {
  OrdTerms remainder;
  while (!work.empty()) {
    auto lead = work.begin();
    const OrdTerms* red = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g[0].m.divides(lead->first)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      remainder.push_back({lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const OrdTerms& g = *red;
    Monomial q = lead->first / g[0].m;
    Rational c = lead->second / g[0].c;
    for (auto& t : g) {
      Monomial key = t.m * q;
      auto it = work.find(key);
      if (it == work.end()) {
        work.emplace(std::move(key), -c * t.c);
      } else {
        it->second -= c * t.c;
        if (isZero(it->second)) work.erase(it);
      }
    }
  }
  return remainder;
}

// Full normal form against basis (elements sorted descending).
OrdTerms reduceFull(const OrdTerms& f, const std::vector<OrdTerms>& basis,
                    const MonomialOrder& ord) {
  return reduceMap(toMap(f, ord), basis, ord);
}

void makeMonic(OrdTerms& f) {
  if (f.empty()) return;
  Rational lc = f[0].c;
  if (lc == 1) return;
  Rational inv = makeRational(lc.get_den(), lc.get_num());
  for (auto& t : f) t.c *= inv;
}

// Scale to integer coefficients with content 1 and positive lead; working
// with primitive integer basis elements keeps mpq operations cheap (monic
// normalization would drag large denominators through every reduction).
void makePrimitive(OrdTerms& f) {
  if (f.empty()) return;
  mpz_class den(1), num(0);
  for (auto& t : f) {
    den = lcm(den, t.c.get_den());
    num = gcd(num, t.c.get_num());
  }
  Rational scale = makeRational(den, num);
  if (sgn(f[0].c) < 0) scale = -scale;
  if (scale == 1) return;
  for (auto& t : f) {
    t.c *= scale;
    t.c.canonicalize();
  }
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g,
                       const MonomialOrder& ord) {
  const Term& lf = f.leadingTerm(ord);
  const Term& lg = g.leadingTerm(ord);
  Monomial l = Monomial::lcm(lf.m, lg.m);
  Polynomial a = f.mulTerm(l / lf.m, makeRational(lf.c.get_den(), lf.c.get_num()));
  Polynomial b = g.mulTerm(l / lg.m, makeRational(lg.c.get_den(), lg.c.get_num()));
  return a - b;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord) {
  RingPtr ring;
  for (auto& g : gens) {
    if (g.ring()) {
      if (!ring)
        ring = g.ring();
      else if (!ring->sameVars(*g.ring()))
        throw std::invalid_argument("mixed-ring generators");
    }
  }
  if (!ring) return {};

  // interreduce the input: sort by leading monomial and keep only elements
  // with a nonzero normal form against those already kept -- large generating
  // sets (e.g. a previous reduced basis) shrink substantially here
  std::vector<OrdTerms> input;
  for (auto& g : gens) {
    if (g.isZero()) continue;
    OrdTerms t = toOrd(g, ord);
    makePrimitive(t);
    input.push_back(std::move(t));
  }
  std::sort(input.begin(), input.end(),
            [&](const OrdTerms& a, const OrdTerms& b) {
              return ord.less(a[0].m, b[0].m);
            });
  std::vector<OrdTerms> basis;
  for (auto& t : input) {
    OrdTerms r = reduceFull(t, basis, ord);
    if (r.empty()) continue;
    makePrimitive(r);
    basis.push_back(std::move(r));
  }

  auto pairLess = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  std::multiset<Pair, decltype(pairLess)> queue(pairLess);
  std::set<std::pair<int, int>> pending;
  auto pushPair = [&](int i, int j) {
    const Monomial &mi = basis[i][0].m, &mj = basis[j][0].m;
    if (mi.coprime(mj)) return;  // product criterion
    Monomial l = Monomial::lcm(mi, mj);
    queue.insert({i, j, l, l.degree()});
    pending.insert({i, j});
  };

  for (int j = 1; j < (int)basis.size(); ++j)
    for (int i = 0; i < j; ++i) pushPair(i, j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    // chain criterion: skip if some k with LM_k | lcm has both side pairs done
    bool skip = false;
    for (int k = 0; k < (int)basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k][0].m.divides(p.lcm)) continue;
      auto key1 = std::minmax(p.i, k);
      auto key2 = std::minmax(p.j, k);
      if (!pending.count({key1.first, key1.second}) &&
          !pending.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    const OrdTerms &f = basis[p.i], &g = basis[p.j];
    // S-polynomial lc_g*(lcm/LM_f)*f - lc_f*(lcm/LM_g)*g (basis primitive)
    TermMap s(OrdCmp{&ord});
    Monomial qf = p.lcm / f[0].m, qg = p.lcm / g[0].m;
    const Rational &cf = f[0].c, &cg = g[0].c;
    for (auto& x : f) s.emplace(x.m * qf, cg * x.c);
    for (auto& x : g) {
      Monomial key = x.m * qg;
      auto it = s.find(key);
      if (it == s.end()) {
        s.emplace(std::move(key), -cf * x.c);
      } else {
        it->second -= cf * x.c;
        if (isZero(it->second)) s.erase(it);
      }
    }
    OrdTerms r = reduceMap(std::move(s), basis, ord);
    if (!r.empty()) {
      makePrimitive(r);
      basis.push_back(std::move(r));
      int n = (int)basis.size() - 1;
      for (int i = 0; i < n; ++i) pushPair(i, n);
    }
  }

  // minimalize: drop elements whose LM is divisible by another LM
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j][0].m.divides(basis[i][0].m) &&
          !(basis[j][0].m == basis[i][0].m && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<OrdTerms> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // reduce tails (temporarily blank the element under reduction; reducers
  // skip empty entries)
  std::vector<OrdTerms> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    OrdTerms self;
    std::swap(self, minimal[i]);
    OrdTerms r = reduceFull(self, minimal, ord);
    std::swap(self, minimal[i]);
    if (!r.empty()) {
      makeMonic(r);
      reduced.push_back(std::move(r));
    }
  }

  std::sort(reduced.begin(), reduced.end(),
            [&](const OrdTerms& a, const OrdTerms& b) {
              return ord.less(a[0].m, b[0].m);
            });
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& t : reduced) out.push_back(fromOrd(ring, t));
  return out;
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& gb,
                      const MonomialOrder& ord) {
  if (f.isZero()) return f;
  std::vector<OrdTerms> basis;
  for (auto& g : gb) {
    if (g.ring() && f.ring() && !g.ring()->sameVars(*f.ring()))
      throw std::invalid_argument("mixed-ring normal form");
    if (!g.isZero()) basis.push_back(toOrd(g, ord));
  }
  OrdTerms r = reduceFull(toOrd(f, ord), basis, ord);
  return fromOrd(f.ring(), r);
}

}  // namespace mustafin

#include "mustafin/flag.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mustafin/qt.hpp"

namespace mustafin {

FlagType FlagType::make(int d, std::vector<int> ranks) {
  if (ranks.empty()) throw std::invalid_argument("empty flag type");
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1 || ranks[i] > d - 1)
      throw std::invalid_argument("flag rank out of range");
    if (i > 0 && ranks[i] <= ranks[i - 1])
      throw std::invalid_argument("flag ranks must be strictly ascending");
  }
  return FlagType{d, std::move(ranks)};
}

int FlagType::flagDimension() const {
  int dim = 0;
  for (size_t i = 0; i < ranks.size(); ++i) {
    int next = (i + 1 < ranks.size()) ? ranks[i + 1] : d;
    dim += ranks[i] * (next - ranks[i]);
  }
  return dim;
}

bool FlagType::isSubTypeOf(const FlagType& other) const {
  if (d != other.d) return false;
  return std::includes(other.ranks.begin(), other.ranks.end(), ranks.begin(),
                       ranks.end());
}

std::string FlagType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (i) s += "<";
    s += std::to_string(ranks[i]);
  }
  return s + ")";
}

std::string plueckerVarName(int vertex, int level, const std::vector<int>& subset,
                            int d) {
  std::string s = "p" + std::to_string(vertex) + "_" + std::to_string(level) + "_";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i && d > 9) s += ",";
    s += std::to_string(subset[i] + 1);
  }
  return s;
}

RingPtr plueckerRing(int d, const FlagType& flag, int nVertices, bool withParam) {
  std::vector<VarInfo> vars;
  std::vector<Block> blocks;
  for (int j = 1; j <= nVertices; ++j) {
    for (int lvl = 1; lvl <= flag.levels(); ++lvl) {
      Block blk{j, lvl, {}};
      for (auto& S : subsetsLex(d, flag.ranks[lvl - 1])) {
        blk.varIdx.push_back((int)vars.size());
        vars.push_back({plueckerVarName(j, lvl, S, d), j, lvl, false});
      }
      blocks.push_back(std::move(blk));
    }
  }
  if (withParam) vars.push_back({"t", -1, -1, true});
  return PolyRing::make(std::move(vars), std::move(blocks));
}

std::vector<int> blockVars(const RingPtr& ring, int vertex, int level) {
  for (auto& b : ring->blocks())
    if (b.vertex == vertex && b.level == level) return b.varIdx;
  throw std::invalid_argument("no such block");
}

std::vector<int> vertexVars(const RingPtr& ring, int vertex) {
  std::vector<int> out;
  for (auto& b : ring->blocks())
    if (b.vertex == vertex)
      out.insert(out.end(), b.varIdx.begin(), b.varIdx.end());
  if (out.empty()) throw std::invalid_argument("no such vertex");
  return out;
}

namespace {

// Antisymmetric Plücker symbol: sorted subset index and sorting sign, or
// sign 0 on a repeated index.
struct Symbol {
  int sign;       // -1, 0, +1
  int subsetIdx;  // index into subsetsLex(d, k)
};

Symbol sortedSymbol(std::vector<int> idx,
                    const std::map<std::vector<int>, int>& subsetIndex) {
  int sign = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return {0, -1};
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  auto it = subsetIndex.find(idx);
  if (it == subsetIndex.end()) throw std::logic_error("subset lookup failed");
  return {sign, it->second};
}

}  // namespace

std::vector<Polynomial> flagIdealGenerators(const RingPtr& ring, int vertex,
                                            const FlagType& flag) {
  int d = flag.d;
  std::vector<Polynomial> gens;
  std::set<std::vector<std::pair<std::vector<int>, Rational>>> seen;  // dedupe

  for (int la = 1; la <= flag.levels(); ++la) {
    int ka = flag.ranks[la - 1];
    auto subsA = subsetsLex(d, ka);
    std::map<std::vector<int>, int> idxA;
    for (size_t i = 0; i < subsA.size(); ++i) idxA[subsA[i]] = (int)i;
    auto varsA = blockVars(ring, vertex, la);
    for (int lb = la; lb <= flag.levels(); ++lb) {
      int kb = flag.ranks[lb - 1];
      auto subsB = subsetsLex(d, kb);
      std::map<std::vector<int>, int> idxB;
      for (size_t i = 0; i < subsB.size(); ++i) idxB[subsB[i]] = (int)i;
      auto varsB = blockVars(ring, vertex, lb);
      // exchange relations: alpha of size ka-1, beta of size kb+1
      for (auto& alpha : subsetsLex(d, ka - 1)) {
        for (auto& beta : subsetsLex(d, kb + 1)) {
          Polynomial rel = Polynomial::zero(ring);
          for (size_t pos = 0; pos < beta.size(); ++pos) {
            std::vector<int> first = alpha;
            first.push_back(beta[pos]);
            Symbol sa = sortedSymbol(first, idxA);
            if (sa.sign == 0) continue;
            std::vector<int> second;
            for (size_t q = 0; q < beta.size(); ++q)
              if (q != pos) second.push_back(beta[q]);
            Symbol sb = sortedSymbol(second, idxB);
            if (sb.sign == 0) continue;
            int sgn = ((int)pos % 2 == 0 ? 1 : -1) * sa.sign * sb.sign;
            Monomial m(ring->varCount());
            m.e[varsA[sa.subsetIdx]] += 1;
            m.e[varsB[sb.subsetIdx]] += 1;
            rel = rel + Polynomial::term(ring, std::move(m), makeRational(sgn));
          }
          if (rel.isZero()) continue;
          rel = rel.primitivePart();
          std::vector<std::pair<std::vector<int>, Rational>> key;
          for (auto& t : rel.terms()) key.push_back({t.m.e, t.c});
          if (seen.insert(key).second) gens.push_back(rel);
        }
      }
    }
  }
  return gens;
}

std::vector<std::vector<Rational>> flagPointOfMatrix(
    const FlagType& flag, const std::vector<std::vector<Rational>>& mat) {
  int d = flag.d;
  std::vector<std::vector<Rational>> out;
  for (int k : flag.ranks) {
    auto subs = subsetsLex(d, k);
    std::vector<Rational> coords;
    coords.reserve(subs.size());
    for (auto& cols : subs) {
      // minor of the first k rows on the given columns, exact over Q
      QtMatrix sub(k, std::vector<QtRat>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sub[i][j] = QtRat::constant(mat[i][cols[j]]);
      QtRat det = determinant(sub);
      coords.push_back(det.isZero() ? Rational(0)
                                    : det.num().coeff(0) / det.den().coeff(0));
    }
    out.push_back(std::move(coords));
  }
  return out;
}

std::vector<std::vector<Rational>> randomFlagPoint(const FlagType& flag, Rng& rng) {
  int d = flag.d;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) mat[i][j] = makeRational(rng.range(-5, 5));
    QtMatrix qm(d, std::vector<QtRat>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) qm[i][j] = QtRat::constant(mat[i][j]);
    if (determinant(qm).isZero()) continue;
    return flagPointOfMatrix(flag, mat);
  }
  throw std::runtime_error("random flag point: retries exhausted");
}

}  // namespace mustafin

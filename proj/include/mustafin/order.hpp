#ifndef MUSTAFIN_ORDER_HPP
#define MUSTAFIN_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mustafin/monomial.hpp"

namespace mustafin {

/// Total multiplicative well-order on monomials. Three kinds:
///  - degrevlex: graded reverse lexicographic over the ring's variable
///    ranking (an explicit ranking permutation may reorder variables);
///  - lex: lexicographic over the ranking;
///  - elimination(front): any monomial touching a front variable ranks above
///    all monomials free of them (degrevlex on the front part, ties broken
///    by degrevlex on the rest).
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, Lex, Elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}, {}); }
  /// degrevlex with the given variable ranking (var indices, highest first).
  static MonomialOrder degrevlexRanked(std::vector<int> ranking) {
    return MonomialOrder(Kind::Degrevlex, std::move(ranking), {});
  }
  static MonomialOrder lexRanked(std::vector<int> ranking) {
    return MonomialOrder(Kind::Lex, std::move(ranking), {});
  }
  static MonomialOrder elimination(std::vector<int> frontVars) {
    return MonomialOrder(Kind::Elimination, {}, std::move(frontVars));
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& frontVars() const { return front_; }

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Degrevlex:
        return cmpDegrevlex(a, b, rankingFor(a.nvars()));
      case Kind::Lex:
        return cmpLex(a, b, rankingFor(a.nvars()));
      case Kind::Elimination: {
        int c = cmpRestrictedDegrevlex(a, b, front_);
        if (c != 0) return c;
        std::vector<char> inFront(a.nvars(), 0);
        for (int v : front_) inFront[v] = 1;
        std::vector<int> rest;
        rest.reserve(a.nvars());
        for (int i = 0; i < a.nvars(); ++i)
          if (!inFront[i]) rest.push_back(i);
        return cmpRestrictedDegrevlex(a, b, rest);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Stable cache key.
  std::string key() const {
    std::string k;
    switch (kind_) {
      case Kind::Degrevlex: k = "drl"; break;
      case Kind::Lex: k = "lex"; break;
      case Kind::Elimination: k = "elim"; break;
    }
    for (int v : ranking_) k += ":" + std::to_string(v);
    for (int v : front_) k += ";" + std::to_string(v);
    return k;
  }

 private:
  MonomialOrder(Kind k, std::vector<int> ranking, std::vector<int> front)
      : kind_(k), ranking_(std::move(ranking)), front_(std::move(front)) {}

  std::vector<int> rankingFor(int n) const {
    if (!ranking_.empty()) return ranking_;
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = i;
    return r;
  }

  static int cmpDegrevlex(const Monomial& a, const Monomial& b,
                          const std::vector<int>& ranking) {
    int da = 0, db = 0;
    for (int v : ranking) { da += a.e[v]; db += b.e[v]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = (int)ranking.size() - 1; i >= 0; --i) {
      int v = ranking[i];
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }

  static int cmpLex(const Monomial& a, const Monomial& b,
                    const std::vector<int>& ranking) {
    for (int v : ranking) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
  }

  static int cmpRestrictedDegrevlex(const Monomial& a, const Monomial& b,
                                    const std::vector<int>& vars) {
    int da = 0, db = 0;
    for (int v : vars) { da += a.e[v]; db += b.e[v]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = (int)vars.size() - 1; i >= 0; --i) {
      int v = vars[i];
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::vector<int> ranking_;
  std::vector<int> front_;
};

}  // namespace mustafin

#endif

#ifndef MUSTAFIN_POLYNOMIAL_HPP
#define MUSTAFIN_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mustafin/monomial.hpp"
#include "mustafin/order.hpp"
#include "mustafin/rational.hpp"
#include "mustafin/ring.hpp"

namespace mustafin {

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse multivariate polynomial over Q. Terms are kept unique, nonzero,
/// and sorted descending by the canonical (plain lex) comparison, so equal
/// polynomials compare equal structurally regardless of any monomial order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (!mustafin::isZero(c)) p.terms_.push_back({Monomial(ring->varCount()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, int idx, int power = 1) {
    Polynomial p(ring);
    Monomial m(ring->varCount());
    m.e[idx] = power;
    p.terms_.push_back({m, Rational(1)});
    return p;
  }

  static Polynomial term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (!mustafin::isZero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Build from an arbitrary term list (merged and normalized).
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms) {
    std::map<std::vector<int>, Rational> acc;
    for (auto& t : terms) acc[t.m.e] += t.c;
    Polynomial p(ring);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!mustafin::isZero(it->second))
        p.terms_.push_back({Monomial(it->first), it->second});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  int termCount() const { return (int)terms_.size(); }

  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.isOne());
  }
  bool isOne() const {
    return terms_.size() == 1 && terms_[0].m.isOne() && terms_[0].c == 1;
  }

  int totalDegree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  int degreeIn(int var) const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.e[var]);
    return d;
  }

  bool uses(int var) const {
    for (auto& t : terms_)
      if (t.m.e[var] > 0) return true;
    return false;
  }

  uint64_t supportMask() const {
    uint64_t m = 0;
    for (auto& t : terms_) m |= t.m.supportMask();
    return m;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, 1); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, -1); }

  Polynomial operator*(const Polynomial& o) const {
    checkRing(o);
    std::map<std::vector<int>, Rational> acc;
    for (auto& a : terms_)
      for (auto& b : o.terms_) acc[(a.m * b.m).e] += a.c * b.c;
    Polynomial p(ring_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!mustafin::isZero(it->second))
        p.terms_.push_back({Monomial(it->first), it->second});
    return p;
  }

  Polynomial operator*(const Rational& c) const {
    if (mustafin::isZero(c)) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }

  Polynomial mulTerm(const Monomial& m, const Rational& c) const {
    if (mustafin::isZero(c)) return zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    // shifting every exponent by the same monomial preserves the lex order
    return r;
  }

  Polynomial pow(int n) const {
    Polynomial r = constant(ring_, Rational(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Leading term under the given order (linear scan).
  const Term& leadingTerm(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
      if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
    return terms_[best];
  }

  /// GCD of all term monomials (the monomial content).
  Monomial monomialContent() const {
    if (terms_.empty()) return Monomial(ring_->varCount());
    Monomial g = terms_[0].m;
    for (size_t i = 1; i < terms_.size(); ++i) g = Monomial::gcd(g, terms_[i].m);
    return g;
  }

  /// Divide out an exact monomial factor.
  Polynomial divideMonomial(const Monomial& m) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m / m, t.c});
    return r;
  }

  /// Scale so the coefficients are coprime integers and the canonically
  /// first term has positive sign.
  Polynomial primitivePart() const {
    if (terms_.empty()) return *this;
    Integer num(0), den(1);
    for (auto& t : terms_) {
      num = gcd(num, t.c.get_num());
      den = lcm(den, t.c.get_den());
    }
    Rational scale = makeRational(den, num);  // positive: num is a gcd
    if (sgn(terms_[0].c) < 0) scale = -scale;
    return (*this) * scale;
  }

  /// Scale so the leading coefficient under ord is 1.
  Polynomial monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    Rational lc = leadingTerm(ord).c;
    return (*this) * makeRational(lc.get_den(), lc.get_num());
  }

  /// Substitute a constant for one variable.
  Polynomial substitute(int var, const Rational& value) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
      Term nt = t;
      int e = nt.m.e[var];
      if (e > 0) {
        Rational v(1);
        for (int i = 0; i < e; ++i) v *= value;
        nt.c *= v;
        nt.m.e[var] = 0;
      }
      out.push_back(std::move(nt));
    }
    return fromTerms(ring_, std::move(out));
  }

  /// Map into another ring by variable name. Throws if a used variable is
  /// missing in the target.
  Polynomial mapToRing(const RingPtr& target) const {
    std::vector<int> map(ring_->varCount(), -1);
    for (int i = 0; i < ring_->varCount(); ++i)
      if (target->hasVar(ring_->var(i).name)) map[i] = target->indexOf(ring_->var(i).name);
    std::vector<Term> out;
    for (auto& t : terms_) {
      Monomial m(target->varCount());
      for (int i = 0; i < ring_->varCount(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (map[i] < 0)
          throw std::invalid_argument("variable " + ring_->var(i).name +
                                      " absent in target ring");
        m.e[map[i]] = t.m.e[i];
      }
      out.push_back({std::move(m), t.c});
    }
    return fromTerms(target, std::move(out));
  }

  /// Degree in each block of the ring (-1 for the zero polynomial).
  std::vector<int> blockDegrees() const;
  /// True if every term has the same degree vector across all blocks.
  bool isMultihomogeneous() const;
  /// True if every term has the same total degree.
  bool isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].m.degree();
    for (auto& t : terms_)
      if (t.m.degree() != d) return false;
    return true;
  }

 private:
  Polynomial merged(const Polynomial& o, int sign) const {
    checkRing(o);
    Polynomial r(ring_ ? ring_ : o.ring_);
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j >= o.terms_.size() ||
          (i < terms_.size() && o.terms_[j].m.lexBefore(terms_[i].m))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i >= terms_.size() || terms_[i].m.lexBefore(o.terms_[j].m)) {
        Term t = o.terms_[j++];
        if (sign < 0) t.c = -t.c;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = terms_[i].c + (sign < 0 ? -o.terms_[j].c : o.terms_[j].c);
        if (!mustafin::isZero(c)) r.terms_.push_back({terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void checkRing(const Polynomial& o) const {
    if (ring_ && o.ring_ && !ring_->sameVars(*o.ring_))
      throw std::invalid_argument("mixed-ring polynomial arithmetic");
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::vector<int> Polynomial::blockDegrees() const {
  const auto& blocks = ring_->blocks();
  std::vector<int> deg(blocks.size(), -1);
  if (terms_.empty()) return deg;
  for (size_t b = 0; b < blocks.size(); ++b) {
    int d = 0;
    for (int v : blocks[b].varIdx) d += terms_[0].m.e[v];
    deg[b] = d;
  }
  return deg;
}

inline bool Polynomial::isMultihomogeneous() const {
  const auto& blocks = ring_->blocks();
  if (terms_.empty()) return true;
  std::vector<int> ref = blockDegrees();
  for (auto& t : terms_) {
    for (size_t b = 0; b < blocks.size(); ++b) {
      int d = 0;
      for (int v : blocks[b].varIdx) d += t.m.e[v];
      if (d != ref[b]) return false;
    }
  }
  return true;
}

}  // namespace mustafin

#endif

#ifndef MUSTAFIN_MONOMIAL_HPP
#define MUSTAFIN_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace mustafin {

/// Dense exponent vector aligned with a ring's variable list.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return (int)e.size(); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool isOne() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  /// Quotient, assuming o divides *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }

  uint64_t supportMask() const {
    uint64_t m = 0;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) m |= (uint64_t)1 << i;
    return m;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  /// Canonical storage comparison (plain lex on exponents); not a monomial
  /// order in the algebraic sense, only a total order for term containers.
  bool lexBefore(const Monomial& o) const { return e < o.e; }
};

}  // namespace mustafin

#endif

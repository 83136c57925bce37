#ifndef MUSTAFIN_QT_HPP
#define MUSTAFIN_QT_HPP

#include <optional>
#include <string>
#include <vector>

#include "mustafin/rational.hpp"

namespace mustafin {

/// Laurent polynomial in t over Q: coefficients of t^{low}, t^{low+1}, ...
/// with nonzero first and last coefficient (zero has empty coefficients).
class QtPoly {
 public:
  QtPoly() = default;
  QtPoly(std::vector<Rational> coeffs, int low) : c_(std::move(coeffs)), low_(low) {
    normalize();
  }
  static QtPoly zero() { return QtPoly(); }
  static QtPoly constant(const Rational& r) { return QtPoly({r}, 0); }
  static QtPoly tpow(int e, const Rational& coeff = Rational(1)) {
    return QtPoly({coeff}, e);
  }

  bool isZero() const { return c_.empty(); }
  int lowDegree() const { return low_; }  // t-adic valuation for nonzero
  int highDegree() const { return low_ + (int)c_.size() - 1; }
  int valuation() const { return low_; }
  bool isPolynomial() const { return c_.empty() || low_ >= 0; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int e) const {
    if (e < low_ || e > highDegree()) return Rational(0);
    return c_[e - low_];
  }

  QtPoly operator+(const QtPoly& o) const;
  QtPoly operator-(const QtPoly& o) const;
  QtPoly operator-() const;
  QtPoly operator*(const QtPoly& o) const;
  QtPoly operator*(const Rational& r) const;
  QtPoly shifted(int e) const { return QtPoly(c_, low_ + e); }

  bool operator==(const QtPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const QtPoly& o) const { return !(*this == o); }

  Rational evaluate(const Rational& t) const;

  /// Exact division; throws if the remainder is nonzero. Both Laurent.
  QtPoly dividedBy(const QtPoly& d) const;
  /// Euclidean division remainder for ordinary (low >= 0) polynomials.
  static void divmod(const QtPoly& a, const QtPoly& b, QtPoly& q, QtPoly& r);
  static QtPoly gcd(const QtPoly& a, const QtPoly& b);

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
  int low_ = 0;
};

/// Rational function num/den in t, den a polynomial with nonzero constant
/// term (t-powers are absorbed into the Laurent numerator), gcd-reduced,
/// den monic.
class QtRat {
 public:
  QtRat() : num_(), den_(QtPoly::constant(Rational(1))) {}
  QtRat(QtPoly num, QtPoly den);
  QtRat(const QtPoly& p) : num_(p), den_(QtPoly::constant(Rational(1))) {}
  static QtRat constant(const Rational& r) { return QtRat(QtPoly::constant(r)); }

  const QtPoly& num() const { return num_; }
  const QtPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  /// t-adic valuation (den has valuation 0); throws on zero.
  int valuation() const;

  QtRat operator+(const QtRat& o) const;
  QtRat operator-(const QtRat& o) const;
  QtRat operator-() const;
  QtRat operator*(const QtRat& o) const;
  QtRat operator/(const QtRat& o) const;
  bool operator==(const QtRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QtRat& o) const { return !(*this == o); }

 private:
  QtPoly num_, den_;
};

using QtMatrix = std::vector<std::vector<QtRat>>;

QtRat determinant(const QtMatrix& m);
QtMatrix inverse(const QtMatrix& m);  // throws on singular
QtMatrix matMul(const QtMatrix& a, const QtMatrix& b);

/// All sorted k-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> subsetsLex(int d, int k);

/// k-th compound: entry (S,T) is the minor on rows S, columns T, subsets in
/// lexicographic order.
QtMatrix compoundMatrix(const QtMatrix& m, int k);

/// t-adic valuations of the invariant factors of a nonsingular matrix over
/// the valuation ring Q[t]_(t), ascending. Computed from the valuation
/// minima of the k x k minors.
std::vector<int> elementaryDivisorExponents(const QtMatrix& m);

/// Laurent-polynomial parser for matrix entries: same term syntax as the
/// multivariate parser with single variable `t`, negative powers allowed.
QtPoly parseLaurent(const std::string& text);
std::string printLaurent(const QtPoly& p);

}  // namespace mustafin

#endif

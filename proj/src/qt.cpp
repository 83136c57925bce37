#include "mustafin/qt.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace mustafin {

namespace {
// isZero(Rational) from rational.hpp is shadowed by QtPoly::isZero() inside
// member definitions; give it an unambiguous name.
inline bool rationalIsZero(const Rational& r) { return isZero(r); }
}  // namespace

void QtPoly::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && rationalIsZero(c_[lead])) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  size_t tail = c_.size();
  while (tail > lead && rationalIsZero(c_[tail - 1])) --tail;
  if (lead > 0 || tail < c_.size()) {
    c_ = std::vector<Rational>(c_.begin() + lead, c_.begin() + tail);
    low_ += (int)lead;
  }
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  int lo = std::min(low_, o.low_);
  int hi = std::max(highDegree(), o.highDegree());
  std::vector<Rational> out(hi - lo + 1, Rational(0));
  for (int e = low_; e <= highDegree(); ++e) out[e - lo] += c_[e - low_];
  for (int e = o.low_; e <= o.highDegree(); ++e) out[e - lo] += o.c_[e - o.low_];
  return QtPoly(std::move(out), lo);
}

QtPoly QtPoly::operator-() const {
  QtPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const { return *this + (-o); }

QtPoly QtPoly::operator*(const QtPoly& o) const {
  if (isZero() || o.isZero()) return zero();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return QtPoly(std::move(out), low_ + o.low_);
}

QtPoly QtPoly::operator*(const Rational& r) const {
  if (rationalIsZero(r)) return zero();
  QtPoly out(*this);
  for (auto& x : out.c_) x *= r;
  return out;
}

Rational QtPoly::evaluate(const Rational& t) const {
  if (isZero()) return Rational(0);
  if (low_ < 0 && rationalIsZero(t))
    throw std::invalid_argument("evaluating Laurent tail at t = 0");
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  Rational tp(1);
  if (low_ > 0)
    for (int i = 0; i < low_; ++i) tp *= t;
  else
    for (int i = 0; i < -low_; ++i) tp /= t;
  return acc * tp;
}

void QtPoly::divmod(const QtPoly& a, const QtPoly& b, QtPoly& q, QtPoly& r) {
  if (b.isZero()) throw std::invalid_argument("division by zero polynomial");
  if (a.low_ < 0 || b.low_ < 0)
    throw std::invalid_argument("divmod needs ordinary polynomials");
  std::vector<Rational> rem(a.highDegree() + 1, Rational(0));
  for (int e = a.low_; e <= a.highDegree(); ++e) rem[e] = a.coeff(e);
  int db = b.highDegree();
  Rational lb = b.coeff(db);
  std::vector<Rational> quo;
  int da = (int)rem.size() - 1;
  if (da >= db) quo.assign(da - db + 1, Rational(0));
  for (int e = da; e >= db; --e) {
    if (rationalIsZero(rem[e])) continue;
    Rational f = rem[e] / lb;
    quo[e - db] = f;
    for (int j = 0; j <= db; ++j) rem[e - db + j] -= f * b.coeff(j);
  }
  q = QtPoly(std::move(quo), 0);
  r = QtPoly(std::move(rem), 0);
}

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
  // ignore t-power shifts: gcd of the underlying ordinary polynomials times
  // the minimal common t-power is what callers want; here gcd of shifted-
  // to-zero parts
  QtPoly x = a.isZero() ? a : a.shifted(-a.low_);
  QtPoly y = b.isZero() ? b : b.shifted(-b.low_);
  while (!y.isZero()) {
    QtPoly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  if (x.isZero()) return x;
  // monic
  return x * makeRational(x.coeff(x.highDegree()).get_den(),
                          x.coeff(x.highDegree()).get_num());
}

QtPoly QtPoly::dividedBy(const QtPoly& d) const {
  if (d.isZero()) throw std::invalid_argument("division by zero");
  if (isZero()) return zero();
  QtPoly a = shifted(-low_), b = d.shifted(-d.low_);
  QtPoly q, r;
  divmod(a, b, q, r);
  if (!r.isZero()) throw std::invalid_argument("inexact polynomial division");
  return q.shifted(low_ - d.low_);
}

std::string QtPoly::str() const { return printLaurent(*this); }

QtRat::QtRat(QtPoly num, QtPoly den) {
  if (den.isZero()) throw std::invalid_argument("zero denominator");
  if (num.isZero()) {
    num_ = QtPoly::zero();
    den_ = QtPoly::constant(Rational(1));
    return;
  }
  // absorb t-powers of den into num
  int shift = den.lowDegree();
  den = den.shifted(-shift);
  num = num.shifted(-shift);
  QtPoly g = QtPoly::gcd(num, den);
  if (g.highDegree() > 0) {
    num = num.dividedBy(g);
    den = den.dividedBy(g);
  }
  // make den monic
  Rational lc = den.coeff(den.highDegree());
  Rational inv = makeRational(lc.get_den(), lc.get_num());
  num_ = num * inv;
  den_ = den * inv;
}

int QtRat::valuation() const {
  if (isZero()) throw std::logic_error("valuation of zero");
  return num_.valuation();
}

QtRat QtRat::operator+(const QtRat& o) const {
  return QtRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
QtRat QtRat::operator-(const QtRat& o) const {
  return QtRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
QtRat QtRat::operator-() const { return QtRat(-num_, den_); }
QtRat QtRat::operator*(const QtRat& o) const {
  return QtRat(num_ * o.num_, den_ * o.den_);
}
QtRat QtRat::operator/(const QtRat& o) const {
  if (o.isZero()) throw std::invalid_argument("division by zero");
  return QtRat(num_ * o.den_, den_ * o.num_);
}

QtRat determinant(const QtMatrix& m) {
  size_t n = m.size();
  if (n == 0) return QtRat::constant(Rational(1));
  if (n == 1) return m[0][0];
  QtRat det;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].isZero()) continue;
    QtMatrix minor;
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<QtRat> row(m[r].begin() + 1, m[r].end());
      minor.push_back(std::move(row));
    }
    QtRat term = m[i][0] * determinant(minor);
    det = (i % 2 == 0) ? det + term : det - term;
  }
  return det;
}

QtMatrix matMul(const QtMatrix& a, const QtMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QtMatrix out(n, std::vector<QtRat>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      QtRat acc;
      for (size_t l = 0; l < k; ++l) acc = acc + a[i][l] * b[l][j];
      out[i][j] = acc;
    }
  return out;
}

QtMatrix inverse(const QtMatrix& m) {
  size_t n = m.size();
  QtMatrix a = m;
  QtMatrix inv(n, std::vector<QtRat>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = QtRat::constant(Rational(1));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].isZero()) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    QtRat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].isZero()) continue;
      QtRat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<std::vector<int>> subsetsLex(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < d; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

QtRat minorOf(const QtMatrix& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  QtMatrix sub(rows.size(), std::vector<QtRat>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[rows[i]][cols[j]];
  return determinant(sub);
}

}  // namespace

QtMatrix compoundMatrix(const QtMatrix& m, int k) {
  int d = (int)m.size();
  auto subs = subsetsLex(d, k);
  QtMatrix out(subs.size(), std::vector<QtRat>(subs.size()));
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < subs.size(); ++j) out[i][j] = minorOf(m, subs[i], subs[j]);
  return out;
}

std::vector<int> elementaryDivisorExponents(const QtMatrix& m) {
  int d = (int)m.size();
  QtRat det = determinant(m);
  if (det.isZero()) throw std::invalid_argument("singular matrix");
  // delta_k = min valuation over k x k minors; exponents are differences
  std::vector<int> delta(d + 1, 0);
  for (int k = 1; k <= d; ++k) {
    auto subs = subsetsLex(d, k);
    bool any = false;
    int best = 0;
    for (auto& rows : subs)
      for (auto& cols : subs) {
        QtRat mm = minorOf(m, rows, cols);
        if (mm.isZero()) continue;
        int v = mm.valuation();
        if (!any || v < best) best = v;
        any = true;
      }
    if (!any) throw std::logic_error("nonsingular matrix with zero compound");
    delta[k] = best;
  }
  std::vector<int> exps;
  for (int k = 1; k <= d; ++k) exps.push_back(delta[k] - delta[k - 1]);
  std::sort(exps.begin(), exps.end());
  return exps;
}

QtPoly parseLaurent(const std::string& text) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  auto fail = [&](const std::string& m) -> void {
    throw std::invalid_argument("entry parse error at " + std::to_string(pos) +
                                ": " + m);
  };
  auto integer = [&]() -> Integer {
    skip();
    std::string digits;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
      digits += text[pos++];
    if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
      fail("expected integer");
    while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
      digits += text[pos++];
    return Integer(digits);
  };
  QtPoly result;
  bool first = true;
  skip();
  while (pos < text.size()) {
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Rational coeff(sign);
    int tExp = 0;
    bool expectFactor = true;
    while (expectFactor) {
      skip();
      if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
        Integer num = integer();
        Integer den(1);
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = integer();
        }
        coeff *= makeRational(num, den);
      } else if (pos < text.size() && text[pos] == 't') {
        ++pos;
        skip();
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = (int)integer().get_si();
        }
        tExp += e;
      } else {
        fail("expected coefficient or t");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expectFactor = false;
      }
    }
    result = result + QtPoly::tpow(tExp, coeff);
    first = false;
    skip();
  }
  if (first) fail("empty entry");
  return result;
}

std::string printLaurent(const QtPoly& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (int e = p.highDegree(); e >= p.lowDegree(); --e) {
    Rational c = p.coeff(e);
    if (rationalIsZero(c)) continue;
    if (first) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    if (e == 0) {
      out += toString(c);
    } else {
      if (c != 1) out += toString(c) + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    first = false;
  }
  return out;
}

}  // namespace mustafin

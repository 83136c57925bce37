#include "mustafin/poly_io.hpp"

#include <cctype>
#include <stdexcept>

namespace mustafin {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& str) : s(str) {}

  void skipWs() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool done() {
    skipWs();
    return pos >= s.size();
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skipWs();
    return s[pos++];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                ": " + msg);
  }

  Integer integer() {
    skipWs();
    std::string digits;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) digits += s[pos++];
    return Integer(digits);
  }

  std::string identifier() {
    skipWs();
    if (pos >= s.size() ||
        !(std::isalpha((unsigned char)s[pos]) || s[pos] == '_'))
      fail("expected variable name");
    std::string id;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      id += s[pos++];
    return id;
  }
};

// term := [coefficient] { '*' factor } | factor { '*' factor }
// factor := name [ '^' int ]
Polynomial parseTerm(Lexer& lx, const RingPtr& ring, int sign) {
  Rational coeff(sign);
  Monomial mono(ring->varCount());
  bool sawAny = false;
  bool expectFactor = true;
  while (expectFactor) {
    char c = lx.peek();
    if (std::isdigit((unsigned char)c)) {
      Integer num = lx.integer();
      Integer den(1);
      if (lx.peek() == '/') {
        lx.take();
        den = lx.integer();
      }
      coeff *= makeRational(num, den);
    } else if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name = lx.identifier();
      int idx = ring->indexOf(name);
      int e = 1;
      if (lx.peek() == '^') {
        lx.take();
        Integer p = lx.integer();
        if (p < 0) lx.fail("negative exponent");
        e = (int)p.get_si();
      }
      mono.e[idx] += e;
    } else {
      lx.fail("expected coefficient or variable");
    }
    sawAny = true;
    if (lx.peek() == '*') {
      lx.take();
    } else {
      expectFactor = false;
    }
  }
  if (!sawAny) lx.fail("empty term");
  return Polynomial::term(ring, std::move(mono), coeff);
}

}  // namespace

Polynomial parsePolynomial(const RingPtr& ring, const std::string& text) {
  Lexer lx(text);
  Polynomial result = Polynomial::zero(ring);
  if (lx.done()) lx.fail("empty input");
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      sign = (c == '-') ? -1 : 1;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    result = result + parseTerm(lx, ring, sign);
    first = false;
  }
  return result;
}

std::string printPolynomial(const Polynomial& f) {
  if (f.isZero()) return "0";
  // terms descending by degrevlex for a stable, readable layout
  auto ord = MonomialOrder::degrevlex();
  std::vector<Term> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  std::string out;
  const auto& ring = *f.ring();
  for (size_t i = 0; i < ts.size(); ++i) {
    Rational c = ts[i].c;
    if (i == 0) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    std::string vars;
    for (int v = 0; v < ts[i].m.nvars(); ++v) {
      int e = ts[i].m.e[v];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ring.var(v).name;
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += toString(c);
    } else {
      if (c != 1) out += toString(c) + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace mustafin

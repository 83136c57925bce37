#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mustafin/ideal_ops.hpp"
#include "mustafin/poly_io.hpp"

using namespace mustafin;

namespace {

RingPtr xyzRing() { return PolyRing::simple({"x", "y", "z"}); }

Polynomial P(const RingPtr& r, const std::string& s) {
  return parsePolynomial(r, s);
}

// tiny deterministic generator for property tests
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int range(int lo, int hi) { return lo + (int)(next() % (uint64_t)(hi - lo + 1)); }
};

Polynomial randomPoly(const RingPtr& r, Rng& rng, int maxTerms = 4,
                      int maxDeg = 2) {
  Polynomial p = Polynomial::zero(r);
  int nt = rng.range(1, maxTerms);
  for (int i = 0; i < nt; ++i) {
    Monomial m(r->varCount());
    for (int v = 0; v < r->varCount(); ++v) m.e[v] = rng.range(0, maxDeg);
    p = p + Polynomial::term(r, m, makeRational(rng.range(-3, 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial text round-trip") {
  auto r = PolyRing::simple({"p1_1_12", "p2_1_13", "t"});
  auto f = P(r, "3/2*p1_1_12^2*t - p2_1_13");
  CHECK(printPolynomial(f) == "3/2*p1_1_12^2*t - p2_1_13");
  CHECK(parsePolynomial(r, printPolynomial(f)) == f);
  CHECK(P(r, "0").isZero());
  CHECK(printPolynomial(P(r, " - 2 * t ^ 3 + 1")) == "-2*t^3 + 1");
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = randomPoly(r, rng);
    CHECK(parsePolynomial(r, printPolynomial(g)) == g);
  }
  CHECK_THROWS(parsePolynomial(r, "q + 1"));
  CHECK_THROWS(parsePolynomial(r, "1 +"));
}

TEST_CASE("buchberger basics") {
  auto r = xyzRing();
  auto drl = MonomialOrder::degrevlex();

  SUBCASE("already reduced") {
    auto gb = buchberger({P(r, "x"), P(r, "y")}, drl);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P(r, "y"));
    CHECK(gb[1] == P(r, "x"));
  }
  SUBCASE("zero ideal") {
    CHECK(buchberger({}, drl).empty());
    CHECK(buchberger({Polynomial::zero(r)}, drl).empty());
  }
  SUBCASE("lex twisted cubic relation") {
    auto lex = MonomialOrder::lex();
    auto gb = buchberger({P(r, "x^2 - y"), P(r, "x^3 - z")}, lex);
    bool found = false;
    for (auto& g : gb)
      if (g == P(r, "y^3 - z^2")) found = true;
    CHECK(found);
    // every input generator reduces to zero
    CHECK(normalForm(P(r, "x^2 - y"), gb, lex).isZero());
    CHECK(normalForm(P(r, "x^3 - z"), gb, lex).isZero());
  }
  SUBCASE("mixed rings rejected") {
    auto r2 = PolyRing::simple({"a", "b"});
    CHECK_THROWS(buchberger({P(r, "x"), P(r2, "a")}, drl));
  }
}

TEST_CASE("buchberger criterion: S-pairs reduce to zero") {
  auto r = xyzRing();
  auto drl = MonomialOrder::degrevlex();
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      auto p = randomPoly(r, rng);
      if (!p.isZero()) gens.push_back(p);
    }
    auto gb = buchberger(gens, drl);
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normalForm(sPolynomial(gb[i], gb[j], drl), gb, drl).isZero());
    for (auto& g : gens) CHECK(normalForm(g, gb, drl).isZero());
  }
}

TEST_CASE("normal form") {
  auto r = xyzRing();
  auto drl = MonomialOrder::degrevlex();
  SUBCASE("generator reduces to zero") {
    auto gb = buchberger({P(r, "x - y")}, drl);
    CHECK(normalForm(P(r, "x - y"), gb, drl).isZero());
  }
  SUBCASE("divisibility") {
    auto gb = buchberger({P(r, "y")}, drl);
    CHECK(normalForm(P(r, "x*y^2"), gb, drl).isZero());
  }
  SUBCASE("single division step") {
    auto gb = buchberger({P(r, "x^2 - y")}, drl);
    CHECK(normalForm(P(r, "x^2 + y"), gb, drl) == P(r, "2*y"));
  }
  SUBCASE("idempotence") {
    Rng rng(99);
    auto gb = buchberger({P(r, "x^2 - y*z"), P(r, "x*y - z^2")}, drl);
    for (int i = 0; i < 20; ++i) {
      auto f = randomPoly(r, rng, 5, 3);
      auto n1 = normalForm(f, gb, drl);
      CHECK(normalForm(n1, gb, drl) == n1);
    }
  }
}

TEST_CASE("eliminate") {
  auto r = xyzRing();
  SUBCASE("linear substitution") {
    Ideal I(r, {P(r, "x - y"), P(r, "y - z")});
    auto E = eliminate(I, {r->indexOf("y")});
    CHECK(idealEqual(E, Ideal(r, {P(r, "x - z")})));
  }
  SUBCASE("no relation") {
    auto rt = PolyRing::simple({"x", "t"});
    Ideal I(rt, {P(rt, "x^2 - t")});
    auto E = eliminate(I, {rt->indexOf("x")});
    CHECK(E.isZeroIdeal());
  }
  SUBCASE("verified by substitution") {
    auto rt = PolyRing::simple({"x", "y", "z", "t"});
    Ideal I(rt, {P(rt, "x - t*y"), P(rt, "x - t*z")});
    auto E = eliminate(I, {rt->indexOf("x")});
    CHECK(idealEqual(E, Ideal(rt, {P(rt, "t*y - t*z")})));
  }
  SUBCASE("equal ideals give equal eliminations") {
    Rng rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
      auto f = randomPoly(r, rng), g = randomPoly(r, rng);
      if (f.isZero() || g.isZero()) continue;
      // two presentations of the same ideal
      Ideal I(r, {f, g});
      Ideal J(r, {f + g, g, f - g * makeRational(rng.range(-2, 2))});
      REQUIRE(idealEqual(I, J));
      auto ei = eliminate(I, {0});
      auto ej = eliminate(J, {0});
      CHECK(idealEqual(ei, ej));
    }
  }
}

TEST_CASE("saturate") {
  auto rt = PolyRing::simple({"x", "y", "t"});
  auto tvar = P(rt, "t");
  SUBCASE("remove t factor") {
    Ideal I(rt, {P(rt, "t*x")});
    CHECK(idealEqual(saturate(I, tvar), Ideal(rt, {P(rt, "x")})));
  }
  SUBCASE("forced unit") {
    Ideal I(rt, {P(rt, "x - t"), P(rt, "t^2")});
    CHECK(saturate(I, tvar).isUnit());
  }
  SUBCASE("common factor") {
    Ideal I(rt, {P(rt, "t*x - t*y")});
    CHECK(idealEqual(saturate(I, tvar), Ideal(rt, {P(rt, "x - y")})));
  }
  SUBCASE("stability") {
    Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
      auto f = randomPoly(rt, rng);
      auto g = randomPoly(rt, rng);
      if (f.isZero() || g.isZero()) continue;
      Ideal I(rt, {f * tvar, g});
      auto S = saturate(I, tvar);
      CHECK(idealEqual(saturate(S, tvar), S));
    }
  }
}

TEST_CASE("saturate by variable ideal") {
  auto r = xyzRing();
  SUBCASE("monomial example with brute-force membership oracle") {
    Ideal I(r, {P(r, "x*y"), P(r, "x*z")});
    auto S = saturateByVariableIdeal(I, {r->indexOf("y"), r->indexOf("z")});
    CHECK(idealEqual(S, Ideal(r, {P(r, "x")})));
    // oracle: on monomials of degree <= 3, membership in I:(y,z)^inf means
    // some power of (y,z) multiplies the monomial into I
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c) {
          Monomial m(3);
          m.e[0] = a; m.e[1] = b; m.e[2] = c;
          auto mono = Polynomial::term(r, m, Rational(1));
          bool inSat = S.contains(mono);
          // brute force: multiply by all (y,z)-monomials of degree k <= 4
          bool oracle = false;
          for (int k = 0; k <= 4 && !oracle; ++k) {
            bool allIn = true;
            for (int i = 0; i <= k; ++i) {
              Monomial w(3);
              w.e[1] = i; w.e[2] = k - i;
              if (!I.contains(mono.mulTerm(w, Rational(1)))) {
                allIn = false;
                break;
              }
            }
            if (allIn) oracle = true;
          }
          CHECK(inSat == oracle);
        }
  }
  SUBCASE("own variable gives unit") {
    Ideal I(r, {P(r, "x")});
    CHECK(saturateByVariableIdeal(I, {r->indexOf("x")}).isUnit());
  }
  SUBCASE("regular variable unchanged") {
    Ideal I(r, {P(r, "y")});
    CHECK(idealEqual(saturateByVariableIdeal(I, {r->indexOf("x")}), I));
  }
}

TEST_CASE("intersect") {
  auto r = xyzRing();
  SUBCASE("principal") {
    CHECK(idealEqual(intersect(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "y")})),
                     Ideal(r, {P(r, "x*y")})));
  }
  SUBCASE("idempotence") {
    Ideal I(r, {P(r, "x^2 - y"), P(r, "z")});
    CHECK(idealEqual(intersect(I, I), I));
  }
  SUBCASE("two variables vs one, with brute-force degree-2 oracle") {
    Ideal I(r, {P(r, "x"), P(r, "y")});
    Ideal J(r, {P(r, "z")});
    auto M = intersect(I, J);
    Ideal expect(r, {P(r, "x*z"), P(r, "y*z")});
    CHECK(idealEqual(M, expect));
    // brute force on all monomials of degree <= 2
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        for (int c = 0; a + b + c <= 2; ++c) {
          Monomial m(3);
          m.e[0] = a; m.e[1] = b; m.e[2] = c;
          auto mono = Polynomial::term(r, m, Rational(1));
          CHECK(M.contains(mono) == (I.contains(mono) && J.contains(mono)));
        }
  }
}

TEST_CASE("radical membership") {
  auto r = xyzRing();
  CHECK(radicalContains(Ideal(r, {P(r, "x^2")}), P(r, "x")));
  CHECK_FALSE(radicalContains(Ideal(r, {P(r, "x^2")}), P(r, "y")));
  Ideal I(r, {P(r, "x*y"), P(r, "x - y")});
  CHECK(radicalContains(I, P(r, "x")));
  // explicit power computation: x^2 = x*y + x*(x - y)
  CHECK(I.contains(P(r, "x^2")));
}

TEST_CASE("ideal radical equality") {
  auto r = xyzRing();
  CHECK(idealEqualRadical(Ideal(r, {P(r, "x^2")}), Ideal(r, {P(r, "x")})));
  CHECK_FALSE(idealEqualRadical(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "y")})));
}

TEST_CASE("dimension") {
  auto r = xyzRing();
  CHECK(dimension(Ideal(r, {P(r, "x")})) == 2);
  auto r5 = PolyRing::simple({"x1", "x2", "x3", "x4", "x5"});
  CHECK(dimension(Ideal::zero(r5)) == 5);
  CHECK(dimension(Ideal::unit(r)) == -1);
  SUBCASE("monotone under adding generators") {
    Rng rng(555);
    for (int trial = 0; trial < 8; ++trial) {
      auto f = randomPoly(r, rng);
      auto g = randomPoly(r, rng);
      Ideal I(r, {f});
      Ideal J(r, {f, g});
      if (dimension(J) >= 0) CHECK(dimension(J) <= dimension(I));
    }
  }
}

TEST_CASE("multigraded Hilbert") {
  SUBCASE("free block of size 2 is a projective line") {
    auto r = PolyRing::blocked({"x", "y"}, {2});
    auto h = multigradedHilbert(Ideal::zero(r), 4);
    for (int s = 0; s <= 4; ++s) CHECK(h[{s}] == s + 1);
  }
  SUBCASE("two points") {
    auto r = PolyRing::blocked({"x", "y"}, {2});
    Ideal I(r, {parsePolynomial(r, "x*y")});
    auto h = multigradedHilbert(I, 4);
    CHECK(h[{0}] == 1);
    for (int s = 1; s <= 4; ++s) CHECK(h[{s}] == 2);
  }
  SUBCASE("Segre minor vs direct enumeration oracle") {
    auto r = PolyRing::blocked({"x1", "x2", "y1", "y2"}, {2, 2});
    Ideal I(r, {parsePolynomial(r, "x1*y2 - x2*y1")});
    auto h = multigradedHilbert(I, 3);
    // oracle: enumerate standard monomials of the initial ideal directly;
    // the initial ideal is (x1*y2), so count monomials x1^a x2^b y1^c y2^d
    // with a+b=s, c+d=u, not divisible by x1*y2
    for (int s = 0; s <= 3; ++s)
      for (int u = 0; u <= 3; ++u) {
        long long cnt = 0;
        for (int a = 0; a <= s; ++a)
          for (int c = 0; c <= u; ++c) {
            int d = u - c;
            if (a >= 1 && d >= 1) continue;
            ++cnt;
          }
        CHECK(h[{s, u}] == cnt);
      }
    // the diagonal values match P^1: (s+1) at bidegree (s,s)
    for (int s = 0; s <= 3; ++s) CHECK(h[{s, s}] == 2 * s + 1);
  }
  SUBCASE("free blocks product formula") {
    auto r = PolyRing::blocked({"a", "b", "c", "x", "y"}, {3, 2});
    auto h = multigradedHilbert(Ideal::zero(r), 3);
    for (int s = 0; s <= 3; ++s)
      for (int u = 0; u <= 3; ++u)
        CHECK(h[{s, u}] == (long long)(s + 1) * (s + 2) / 2 * (u + 1));
  }
  SUBCASE("non-multihomogeneous rejected") {
    auto r = PolyRing::blocked({"x", "y"}, {2});
    Ideal I(r, {parsePolynomial(r, "x^2 - y")});
    CHECK_THROWS(multigradedHilbert(I, 2));
  }
}

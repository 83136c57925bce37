// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mustafin/components.hpp"
#include "mustafin/poly_io.hpp"

using namespace mustafin;
using Clock = std::chrono::steady_clock;

namespace {

Vertex dv(std::vector<int> exps) {
  return Vertex::apartment(ApartmentVertex::normalized(std::move(exps)));
}

double seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int num, bool ok, const std::string& detail, double secs) {
  if (!ok) ++failures;
  std::printf("criterion %d: %s - %s [%.1fs]\n", num, ok ? "PASS" : "FAIL",
              detail.c_str(), secs);
  std::fflush(stdout);
}

void runCriterion(int num, const std::function<std::pair<bool, std::string>()>& f) {
  auto t0 = Clock::now();
  try {
    auto [ok, detail] = f();
    report(num, ok, detail, seconds(t0));
  } catch (const std::exception& e) {
    report(num, false, std::string("exception: ") + e.what(), seconds(t0));
  }
}

// A building-vertex identity key for a classified Grassmannian component:
// primary components key on their configuration vertex, secondary ones on
// the secondary vertex.
std::string vertexKey(const ComponentReport& c) {
  if (c.label == Label::Primary) return "L" + std::to_string(c.primaryVertex);
  if (c.label == Label::Secondary && c.secondaryVertex) {
    if (c.secondaryVertex->diag) return c.secondaryVertex->diag->str();
    return "(non-diagonal)";
  }
  return "";
}

Ideal meetAll(const std::vector<Ideal>& primes) {
  Ideal m = primes.at(0);
  for (size_t i = 1; i < primes.size(); ++i) m = intersect(m, primes[i]);
  return m;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int main() {
  const FlagType F12 = FlagType::make(3, {1, 2});
  const Configuration Gamma =
      Configuration::make(3, {dv({0, 0, 0}), dv({1, 0, 0}), dv({0, 0, 1})});
  const ClassifyOptions opts{1, 1, 64};

  // Shared between criteria 1 and 3.
  DegenerationIdeal Dmain;
  Decomposition decMain;
  bool mainReady = false;

  // 1. Three skew vertices, flag (1<2): exactly 8 components with labels
  //    3 primary (pairwise distinct vertices) + 1 secondary at (1,0,1) + 4 mixed.
  runCriterion(1, [&]() -> std::pair<bool, std::string> {
    Dmain = buildDegeneration(Gamma, F12);
    decMain = classify(Dmain, opts);
    mainReady = true;
    int primary = 0, secondary = 0, mixed = 0;
    std::set<int> primaryVerts;
    bool secondaryAt101 = false;
    for (auto& c : decMain.components) {
      if (c.label == Label::Primary) {
        ++primary;
        primaryVerts.insert(c.primaryVertex);
      } else if (c.label == Label::Secondary) {
        ++secondary;
        if (c.secondaryVertex && c.secondaryVertex->diag &&
            c.secondaryVertex->diag->a == std::vector<int>{1, 0, 1})
          secondaryAt101 = true;
      } else if (c.label == Label::Mixed) {
        ++mixed;
      }
    }
    bool ok = decMain.validated && decMain.components.size() == 8 &&
              primary == 3 && primaryVerts.size() == 3 && secondary == 1 &&
              secondaryAt101 && mixed == 4;
    std::ostringstream d;
    d << decMain.components.size() << " components: " << primary
      << " primary, " << secondary << " secondary"
      << (secondaryAt101 ? "(L4)" : "") << ", " << mixed << " mixed";
    return {ok, d.str()};
  });

  // 2. Two skew vertices, flag (1<2): 2 primary + 0 secondary + 4 mixed = 6,
  //    attaining the n = 2 bound 3!/(1!*1!*1!) = 6.
  runCriterion(2, [&]() -> std::pair<bool, std::string> {
    Configuration g2 = Configuration::make(3, {dv({1, 0, 0}), dv({0, 0, 1})});
    auto D = buildDegeneration(g2, F12);
    auto dec = classify(D, opts);
    int primary = 0, secondary = 0, mixed = 0;
    for (auto& c : dec.components) {
      primary += c.label == Label::Primary;
      secondary += c.label == Label::Secondary;
      mixed += c.label == Label::Mixed;
    }
    auto b = countBounds(F12, 2);
    bool ok = dec.validated && dec.components.size() == 6 && primary == 2 &&
              secondary == 0 && mixed == 4 && b.upper && *b.upper == 6;
    std::ostringstream d;
    d << dec.components.size() << " components: " << primary << " primary, "
      << secondary << " secondary, " << mixed << " mixed; bound "
      << (b.upper ? *b.upper : -1) << (ok ? " attained" : "");
    return {ok, d.str()};
  });

  // 3. Flag projection consistency on the main example: the secondary
  //    component maps onto the (1,0,1)-secondary component of the line
  //    Grassmannian degeneration and onto no component of the plane
  //    Grassmannian degeneration; each mixed component maps onto components
  //    of different vertices in the two projections.
  runCriterion(3, [&]() -> std::pair<bool, std::string> {
    if (!mainReady) return {false, "main example unavailable"};
    auto D1 = buildDegeneration(Gamma, FlagType::make(3, {1}));
    auto D2 = buildDegeneration(Gamma, FlagType::make(3, {2}));
    auto dec1 = classify(D1, opts);
    auto dec2 = classify(D2, opts);

    auto matchIn = [](const Ideal& img, const Decomposition& dec) {
      for (size_t i = 0; i < dec.components.size(); ++i)
        if (idealEqualRadical(img, dec.components[i].prime)) return (int)i;
      return -1;
    };

    bool secondaryOk = false, sawSecondary = false;
    int mixedTotal = 0, mixedOk = 0;
    for (auto& c : decMain.components) {
      if (c.label == Label::Secondary) {
        sawSecondary = true;
        Ideal img1 = projectToSubflag(c.prime, Dmain, D1, {1});
        Ideal img2 = projectToSubflag(c.prime, Dmain, D2, {2});
        int k1 = matchIn(img1, dec1);
        int k2 = matchIn(img2, dec2);
        secondaryOk = k1 >= 0 && k2 < 0 &&
                      dec1.components[k1].label == Label::Secondary &&
                      vertexKey(dec1.components[k1]) == "(1,0,1)";
      } else if (c.label == Label::Mixed) {
        ++mixedTotal;
        Ideal img1 = projectToSubflag(c.prime, Dmain, D1, {1});
        Ideal img2 = projectToSubflag(c.prime, Dmain, D2, {2});
        int k1 = matchIn(img1, dec1);
        int k2 = matchIn(img2, dec2);
        if (k1 >= 0 && k2 >= 0) {
          std::string v1 = vertexKey(dec1.components[k1]);
          std::string v2 = vertexKey(dec2.components[k2]);
          if (!v1.empty() && !v2.empty() && v1 != v2) ++mixedOk;
        }
      }
    }
    bool ok = sawSecondary && secondaryOk && mixedTotal == 4 && mixedOk == 4;
    std::ostringstream d;
    d << "secondary onto (1,0,1)-secondary of the line projection and no "
         "plane-projection component: "
      << (secondaryOk ? "yes" : "no") << "; mixed with distinct projection "
      << "vertices: " << mixedOk << "/" << mixedTotal;
    return {ok, d.str()};
  });

  // 4. Structural invariants (projective dimension, dual graph connectivity,
  //    count bounds) over >= 20 randomized small configurations.
  runCriterion(4, [&]() -> std::pair<bool, std::string> {
    struct Case {
      int d;
      std::vector<int> ranks;
      int n;
      int copies;
    };
    std::vector<Case> cases = {
        {2, {1}, 2, 3},    {2, {1}, 3, 3},    {3, {1}, 2, 2},
        {3, {1}, 3, 2},    {3, {2}, 2, 2},    {3, {2}, 3, 2},
        {4, {1}, 2, 2},    {4, {1}, 3, 2},    {3, {1, 2}, 2, 3},
        {3, {1, 2}, 3, 1},
    };
    Rng rng(2026);
    int tested = 0, violations = 0;
    for (auto& cs : cases) {
      for (int rep = 0; rep < cs.copies; ++rep) {
        // sample a duplicate-free diagonal configuration
        Configuration cfg = Configuration::make(cs.d, {dv(std::vector<int>(cs.d, 0))});
        for (int attempt = 0; attempt < 100; ++attempt) {
          std::vector<Vertex> verts;
          for (int j = 0; j < cs.n; ++j) {
            std::vector<int> e(cs.d);
            for (int i = 0; i < cs.d; ++i) e[i] = rng.range(0, 2);
            verts.push_back(dv(std::move(e)));
          }
          try {
            cfg = Configuration::make(cs.d, std::move(verts));
            break;
          } catch (const std::invalid_argument&) {
            continue;  // duplicate vertices; resample
          }
        }
        if (cfg.size() != cs.n) return {false, "sampling failed"};
        auto D = buildDegeneration(cfg, FlagType::make(cs.d, cs.ranks));
        auto dec = classify(D, ClassifyOptions{rng.next(), 0, 8});
        auto rep2 = structuralChecks(D, dec);
        ++tested;
        if (!rep2.dimensionsOk || !rep2.connected || !rep2.countWithinBounds)
          ++violations;
      }
    }
    std::ostringstream d;
    d << tested << " random configurations, " << violations << " violations";
    return {tested >= 20 && violations == 0, d.str()};
  });

  // 5. Reducedness: special fiber ideal equals the intersection of its
  //    minimal primes (exact ideal equality) in the multiplicity-free cases.
  runCriterion(5, [&]() -> std::pair<bool, std::string> {
    struct Case {
      int d;
      std::vector<int> ranks;
      std::vector<std::vector<int>> verts;
    };
    std::vector<Case> cases = {
        {2, {1}, {{0, 0}, {1, 0}}},
        {2, {1}, {{0, 0}, {1, 0}, {0, 1}}},
        {3, {1}, {{0, 0, 0}, {1, 0, 0}}},
        {3, {1}, {{1, 0, 0}, {0, 0, 1}}},
        {3, {1}, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}}},
        {3, {1, 2}, {{0, 0, 0}, {1, 0, 0}}},
        {3, {1, 2}, {{1, 0, 0}, {0, 0, 1}}},
        {3, {1, 2}, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}}},
    };
    int checked = 0, equal = 0;
    for (auto& cs : cases) {
      std::vector<Vertex> verts;
      for (auto& e : cs.verts) verts.push_back(dv(e));
      auto D = buildDegeneration(Configuration::make(cs.d, std::move(verts)),
                                 FlagType::make(cs.d, cs.ranks));
      auto primes = minimalPrimes(D.fiberIdeal);
      ++checked;
      if (idealEqual(meetAll(primes), D.fiberIdeal)) ++equal;
    }
    std::ostringstream d;
    d << equal << "/" << checked << " fibers equal the intersection of their "
      << "minimal primes";
    return {checked == 8 && equal == checked, d.str()};
  });

  // 6. d = 2 hand oracle: fiber (p1_1_1*p2_1_2), components (p1_1_1) and
  //    (p2_1_2), each primary for the opposite vertex; generic fiber check.
  runCriterion(6, [&]() -> std::pair<bool, std::string> {
    auto D = buildDegeneration(Configuration::make(2, {dv({0, 0}), dv({1, 0})}),
                               FlagType::make(2, {1}));
    const RingPtr& R = D.fiberRing;
    Ideal expect(R, {parsePolynomial(R, "p1_1_1*p2_1_2")});
    bool fiberOk = idealEqual(D.fiberIdeal, expect);
    auto primes = minimalPrimes(D.fiberIdeal);
    Ideal c1(R, {parsePolynomial(R, "p1_1_1")});
    Ideal c2(R, {parsePolynomial(R, "p2_1_2")});
    auto has = [&](const Ideal& P) {
      for (auto& q : primes)
        if (idealEqual(q, P)) return true;
      return false;
    };
    bool compsOk = primes.size() == 2 && has(c1) && has(c2);
    bool oppositeOk = isPrimaryFor(c1, 2, D, 1) && isPrimaryFor(c2, 1, D, 1) &&
                      !isPrimaryFor(c1, 1, D, 1) && !isPrimaryFor(c2, 2, D, 1);
    auto gf = genericFiberCheck(D, 1);
    bool ok = fiberOk && compsOk && oppositeOk && gf.ok;
    std::ostringstream d;
    d << "fiber oracle " << (fiberOk ? "ok" : "FAIL") << ", components "
      << (compsOk ? "ok" : "FAIL") << ", opposite-vertex primality "
      << (oppositeOk ? "ok" : "FAIL") << ", generic fiber "
      << (gf.ok ? "ok" : "FAIL");
    return {ok, d.str()};
  });

  // 7. Algebra kernel properties, exact, under one minute.
  runCriterion(7, [&]() -> std::pair<bool, std::string> {
    auto t0 = Clock::now();
    auto R = PolyRing::simple({"x", "y", "z"});
    auto P = [&](const std::string& s) { return parsePolynomial(R, s); };
    auto ord = MonomialOrder::degrevlex();
    bool ok = true;
    std::vector<std::string> bad;

    // Buchberger criterion: every S-pair of the reduced basis reduces to 0.
    for (auto gens : {std::vector<Polynomial>{P("x^2 - y"), P("x*y - z")},
                      std::vector<Polynomial>{P("x + y + z"), P("x*y + y*z + z*x"),
                                              P("x*y*z - 1")}}) {
      auto gb = buchberger(gens, ord);
      for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j)
          if (!normalForm(sPolynomial(gb[i], gb[j], ord), gb, ord).isZero())
            ok = false, bad.push_back("s-pair closure");
    }

    // Normal form idempotence.
    {
      auto gb = buchberger({P("x^2 - y"), P("x*y - z")}, ord);
      for (auto& f : {P("x^5 + 3*y^2*z - 7"), P("x^3*y^3 - z^3 + x"),
                      P("1/2*x^4 - 2/3*y*z")}) {
        auto n1 = normalForm(f, gb, ord);
        if (!(normalForm(n1, gb, ord) == n1)) ok = false, bad.push_back("nf idempotence");
      }
    }

    // Saturation stability and exactness.
    {
      Ideal I(R, {P("x^2*y"), P("x*z^2")});
      Ideal S = saturate(I, P("x"));
      if (!idealEqual(S, Ideal(R, {P("y"), P("z^2")})))
        ok = false, bad.push_back("saturation value");
      if (!idealEqual(saturate(S, P("x")), S))
        ok = false, bad.push_back("saturation stability");
    }

    // Elimination correctness.
    {
      Ideal I(R, {P("x^2 - y"), P("x*z - 1")});
      Ideal E = eliminate(I, {0});  // drop x
      if (!idealEqual(E, Ideal(R, {P("y*z^2 - 1")})))
        ok = false, bad.push_back("elimination");
      Ideal circle(R, {P("x^2 + y^2 - 1"), P("x - y")});
      if (!idealEqual(eliminate(circle, {0}), Ideal(R, {P("y^2 - 1/2")})))
        ok = false, bad.push_back("elimination 2");
    }

    // Hilbert function of free blocks: h(a,b) = C(a+2,2)*C(b+1,1).
    {
      auto B = PolyRing::blocked({"a1", "a2", "a3", "b1", "b2"}, {3, 2});
      Ideal Z = Ideal::zero(B);
      for (int a = 0; a <= 3 && ok; ++a)
        for (int b = 0; b <= 3; ++b)
          if (hilbertValueAt(Z, {a, b}) != binomial(a + 2, 2) * binomial(b + 1, 1)) {
            ok = false, bad.push_back("hilbert");
            break;
          }
    }

    double secs = seconds(t0);
    if (secs > 60.0) ok = false, bad.push_back("over time budget");
    std::ostringstream d;
    if (bad.empty())
      d << "s-pairs, normal forms, saturation, elimination, hilbert all exact";
    else {
      d << "failed:";
      for (auto& b : bad) d << " " << b;
    }
    return {ok, d.str()};
  });

  std::printf("%s (%d of 7 criteria failed)\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
  return failures == 0 ? 0 : 1;
}

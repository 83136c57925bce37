#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mustafin/components.hpp"
#include "mustafin/poly_io.hpp"

using namespace mustafin;

namespace {

Vertex diagVertex(std::vector<int> exps) {
  return Vertex::apartment(ApartmentVertex::normalized(std::move(exps)));
}

DegenerationIdeal d2Line() {
  Configuration cfg =
      Configuration::make(2, {diagVertex({0, 0}), diagVertex({1, 0})});
  return buildDegeneration(cfg, FlagType::make(2, {1}));
}

bool hasPrime(const std::vector<Ideal>& primes, const Ideal& target) {
  return std::any_of(primes.begin(), primes.end(), [&](const Ideal& p) {
    return idealEqualRadical(p, target);
  });
}

}  // namespace

TEST_CASE("minimal primes of hand-built ideals") {
  auto R = PolyRing::simple({"x", "y", "z"});
  auto P = [&](const std::string& s) { return parsePolynomial(R, s); };

  SUBCASE("monomial product splits into variables") {
    auto primes = minimalPrimes(Ideal(R, {P("x*y")}));
    REQUIRE(primes.size() == 2);
    CHECK(hasPrime(primes, Ideal(R, {P("x")})));
    CHECK(hasPrime(primes, Ideal(R, {P("y")})));
  }
  SUBCASE("powers reduce to the radical") {
    auto primes = minimalPrimes(Ideal(R, {P("x^3")}));
    REQUIRE(primes.size() == 1);
    CHECK(idealEqual(primes[0], Ideal(R, {P("x")})));
  }
  SUBCASE("difference of squares splits") {
    auto primes = minimalPrimes(Ideal(R, {P("x^2 - y^2")}));
    REQUIRE(primes.size() == 2);
    CHECK(hasPrime(primes, Ideal(R, {P("x - y")})));
    CHECK(hasPrime(primes, Ideal(R, {P("x + y")})));
  }
  SUBCASE("branches covering a shared locus are not lost") {
    // V(xy, xz) = V(x) ∪ V(y,z); the plane and the line meet where all
    // three vanish
    auto primes = minimalPrimes(Ideal(R, {P("x*y"), P("x*z")}));
    REQUIRE(primes.size() == 2);
    CHECK(hasPrime(primes, Ideal(R, {P("x")})));
    CHECK(hasPrime(primes, Ideal(R, {P("y"), P("z")})));
  }
  SUBCASE("prime input returns itself") {
    auto primes = minimalPrimes(Ideal(R, {P("x - y")}));
    REQUIRE(primes.size() == 1);
    CHECK(idealEqualRadical(primes[0], Ideal(R, {P("x - y")})));
  }
  SUBCASE("unit ideal rejected") {
    CHECK_THROWS_AS(minimalPrimes(Ideal::unit(R)), std::invalid_argument);
  }
}

TEST_CASE("primality confidence certificates") {
  auto R = PolyRing::simple({"x", "y", "z", "w"});
  auto P = [&](const std::string& s) { return parsePolynomial(R, s); };
  // coordinate subspaces and saturated-lattice binomials are certified
  CHECK(primalityConfidence(Ideal(R, {P("x"), P("y")})) ==
        Confidence::Certified);
  CHECK(primalityConfidence(Ideal(R, {P("x*w - y*z")})) ==
        Confidence::Certified);
  CHECK(primalityConfidence(Ideal(R, {P("x^2 - y*z")})) ==
        Confidence::Certified);
  // lattice generated by (2,-2): index 2 in its saturation, not certified
  CHECK(primalityConfidence(Ideal(R, {P("x^2 - y^2")})) ==
        Confidence::Heuristic);
  // non-binomial generator
  CHECK(primalityConfidence(Ideal(R, {P("x^2 + y^2 + z^2")})) ==
        Confidence::Heuristic);
}

TEST_CASE("d = 2 line: decomposition and primary tests") {
  auto D = d2Line();
  auto R = D.fiberRing;
  auto P = [&](const std::string& s) { return parsePolynomial(R, s); };

  auto primes = minimalPrimes(D.fiberIdeal);
  REQUIRE(primes.size() == 2);
  CHECK(hasPrime(primes, Ideal(R, {P("p1_1_1")})));
  CHECK(hasPrime(primes, Ideal(R, {P("p2_1_2")})));

  // each component is primary for the opposite vertex only
  for (auto& p : primes) {
    bool isP1 = idealEqualRadical(p, Ideal(R, {P("p1_1_1")}));
    CHECK(isPrimaryFor(p, 1, D, 1) == !isP1);
    CHECK(isPrimaryFor(p, 2, D, 1) == isP1);
  }

  auto dec = classify(D, {});
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.validated);
  int primary = 0;
  for (auto& c : dec.components) {
    CHECK(c.label == Label::Primary);
    CHECK(c.projectiveDim == 1);
    CHECK(c.confidence == Confidence::Certified);
    ++primary;
  }
  CHECK(primary == 2);
  // the two lines cross: one dual graph edge
  REQUIRE(dec.dualGraphEdges.size() == 1);

  auto rep = structuralChecks(D, dec);
  CHECK(rep.ok());
  REQUIRE(rep.reducedInTableCase.has_value());
  CHECK(*rep.reducedInTableCase);
}

TEST_CASE("single vertex classifies as one primary component") {
  Configuration cfg = Configuration::make(3, {diagVertex({0, 0, 0})});
  auto D = buildDegeneration(cfg, FlagType::make(3, {1, 2}));
  auto dec = classify(D, {});
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.components[0].label == Label::Primary);
  CHECK(dec.components[0].primaryVertex == 1);
  CHECK(dec.components[0].projectiveDim == 3);
  auto rep = structuralChecks(D, dec);
  CHECK(rep.ok());
}

TEST_CASE("identity vertex projection matches birationally") {
  auto D = d2Line();
  auto primes = minimalPrimes(D.fiberIdeal);
  REQUIRE(primes.size() == 2);
  for (size_t i = 0; i < primes.size(); ++i) {
    auto m = matchUnderVertexProjection(primes[i], D, D, primes, 1);
    REQUIRE(m.has_value());
    CHECK(m->componentIdx == (int)i);
    CHECK(m->birational);
  }
}

TEST_CASE("component count bounds") {
  auto b1 = countBounds(FlagType::make(3, {1, 2}), 2);
  CHECK(b1.lower == 2);
  REQUIRE(b1.upper.has_value());
  CHECK(*b1.upper == 6);

  auto b2 = countBounds(FlagType::make(4, {1}), 2);
  CHECK(b2.lower == 2);
  REQUIRE(b2.upper.has_value());
  CHECK(*b2.upper == 4);

  auto b3 = countBounds(FlagType::make(4, {2}), 2);
  REQUIRE(b3.upper.has_value());
  CHECK(*b3.upper == 6);

  auto b4 = countBounds(FlagType::make(3, {1, 2}), 3);
  CHECK(b4.lower == 3);
  CHECK(!b4.upper.has_value());
}

TEST_CASE("secondary component of the projective-space configuration") {
  // d = 3 projective configuration over {(0,0,0),(1,0,0),(0,0,1)}: three
  // primary components plus one secondary at (1,0,1), found among the
  // tropical hull candidates
  Configuration cfg = Configuration::make(
      3, {diagVertex({0, 0, 0}), diagVertex({1, 0, 0}), diagVertex({0, 0, 1})});
  auto D = buildDegeneration(cfg, FlagType::make(3, {1}));
  ClassifyOptions opts;
  opts.candidateRadius = 0;  // hull only
  auto dec = classify(D, opts);
  REQUIRE(dec.components.size() == 4);
  int primary = 0, secondary = 0;
  for (auto& c : dec.components) {
    if (c.label == Label::Primary) ++primary;
    if (c.label == Label::Secondary) {
      ++secondary;
      REQUIRE(c.secondaryVertex.has_value());
      REQUIRE(c.secondaryVertex->diag.has_value());
      CHECK(c.secondaryVertex->diag->a == std::vector<int>{1, 0, 1});
    }
  }
  CHECK(primary == 3);
  CHECK(secondary == 1);
  auto rep = structuralChecks(D, dec);
  CHECK(rep.ok());
  REQUIRE(rep.reducedInTableCase.has_value());
  CHECK(*rep.reducedInTableCase);
}

TEST_CASE("dual configuration has no secondary components") {
  // same vertices, dual projective space: the convex hull adds nothing and
  // all three components are primary
  Configuration cfg = Configuration::make(
      3, {diagVertex({0, 0, 0}), diagVertex({1, 0, 0}), diagVertex({0, 0, 1})});
  auto D = buildDegeneration(cfg, FlagType::make(3, {2}));
  ClassifyOptions opts;
  opts.candidateRadius = 0;
  auto dec = classify(D, opts);
  REQUIRE(dec.components.size() == 3);
  for (auto& c : dec.components) CHECK(c.label == Label::Primary);
  auto rep = structuralChecks(D, dec);
  CHECK(rep.ok());
}

TEST_CASE("general position experiment stays within the Schubert bound") {
  auto rows = generalPositionExperiment(FlagType::make(2, {1}), 4, 11);
  REQUIRE(rows.size() == 4);
  for (auto& r : rows) {
    CHECK(r.bound == 2);
    CHECK(r.componentCount >= 2);
    CHECK(r.componentCount <= r.bound);
  }
}

TEST_CASE("equal vertices are rejected by the configuration invariant") {
  CHECK_THROWS_AS(
      Configuration::make(2, {diagVertex({0, 0}), diagVertex({1, 1})}),
      std::invalid_argument);
}

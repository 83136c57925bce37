#ifndef MUSTAFIN_COMPONENTS_HPP
#define MUSTAFIN_COMPONENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mustafin/degeneration.hpp"

namespace mustafin {

enum class Label { Primary, Secondary, Mixed, TertiaryUnresolved };
enum class Confidence { Certified, Heuristic };

std::string labelName(Label l);

struct MixedEvidence {
  FlagType subFlag1, subFlag2;
  std::string vertex1, vertex2;  // distinct vertex labels
};

/// A minimal prime of the special fiber with its classification.
struct ComponentReport {
  Ideal prime;
  int projectiveDim = -1;
  Label label = Label::TertiaryUnresolved;
  int primaryVertex = -1;                  // 1-based, for Primary
  std::optional<Vertex> secondaryVertex;   // for Secondary
  std::optional<MixedEvidence> mixed;      // for Mixed
  std::vector<std::string> evidence;
  Confidence confidence = Confidence::Heuristic;
};

struct Decomposition {
  Ideal input;
  std::vector<ComponentReport> components;
  bool validated = false;  // ∩ primes ≡ √input
  std::vector<std::pair<int, int>> dualGraphEdges;
  std::vector<std::string> notes;
};

/// Recursive factor-splitting decomposition into minimal primes; validated
/// against the input by radical equality (throws on validation failure).
std::vector<Ideal> minimalPrimes(const Ideal& I);

/// Primality confidence for a splitting leaf: Certified when the leaf is
/// generated by variables plus unit-coefficient binomials whose exponent
/// lattice is saturated (toric criterion); Heuristic otherwise.
Confidence primalityConfidence(const Ideal& leaf);

/// Dominance plus degree-1 fiber test (3 seeds, majority verdict).
bool isPrimaryFor(const Ideal& component, int vertexIdx,
                  const DegenerationIdeal& D, uint64_t seed,
                  std::vector<std::string>* evidence = nullptr);

struct ProjectionMatch {
  int componentIdx;  // index into the target decomposition
  bool birational;
};

/// Image of a component of the larger configuration's fiber under dropping
/// the extra vertices; matched against the smaller decomposition.
std::optional<ProjectionMatch> matchUnderVertexProjection(
    const Ideal& component, const DegenerationIdeal& larger,
    const DegenerationIdeal& smaller, const std::vector<Ideal>& targetComponents,
    uint64_t seed, std::vector<std::string>* evidence = nullptr);

/// Image of a fiber component under dropping flag levels: eliminates the
/// dropped levels' variables and transports the result into the sub-flag
/// degeneration's ring (same configuration, flag restricted to `levels`,
/// which are 1-based level indices of D.flag).
Ideal projectToSubflag(const Ideal& component, const DegenerationIdeal& D,
                       const DegenerationIdeal& Dsub,
                       const std::vector<int>& levels);

/// Classification options.
struct ClassifyOptions {
  uint64_t seed = 1;
  int candidateRadius = 1;
  int maxCandidates = 64;
};

Decomposition classify(const DegenerationIdeal& D, const ClassifyOptions& opts);

struct CountBounds {
  int lower;
  std::optional<long long> upper;  // only for n = 2
};
CountBounds countBounds(const FlagType& flag, int n);

struct StructuralReport {
  bool dimensionsOk = false;
  bool connected = false;
  bool countWithinBounds = false;
  std::optional<bool> reducedInTableCase;  // set when the Table-1 case applies
  std::vector<std::string> failures;
  bool ok() const {
    return dimensionsOk && connected && countWithinBounds &&
           (!reducedInTableCase || *reducedInTableCase);
  }
};

StructuralReport structuralChecks(const DegenerationIdeal& D,
                                  const Decomposition& dec);

struct ExperimentRow {
  uint64_t seed;
  int componentCount;
  long long bound;
};

/// n = 2 random-transition-matrix sampling against the Schubert bound.
std::vector<ExperimentRow> generalPositionExperiment(const FlagType& flag,
                                                     int trials, uint64_t seed);

}  // namespace mustafin

#endif

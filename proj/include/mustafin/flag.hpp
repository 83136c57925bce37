#ifndef MUSTAFIN_FLAG_HPP
#define MUSTAFIN_FLAG_HPP

#include <string>
#include <vector>

#include "mustafin/polynomial.hpp"
#include "mustafin/rng.hpp"

namespace mustafin {

/// Ascending quotient-rank tuple (k_1 < ... < k_r), 1 <= k_i <= d-1.
struct FlagType {
  int d;
  std::vector<int> ranks;

  static FlagType make(int d, std::vector<int> ranks);  // validates
  int levels() const { return (int)ranks.size(); }
  /// dim F(V) = Σ k_t (k_{t+1} - k_t) with k_{r+1} = d.
  int flagDimension() const;
  bool isSubTypeOf(const FlagType& other) const;
  std::string str() const;
};

/// Variable name `p{j}_{lvl}_{S}`, S the 1-based subset digits (comma
/// separated when d > 9).
std::string plueckerVarName(int vertex, int level, const std::vector<int>& subset,
                            int d);

/// Ring with one block of binomial(d,k_t) variables per (vertex, level),
/// and optionally the distinguished parameter t ranked last.
RingPtr plueckerRing(int d, const FlagType& flag, int nVertices, bool withParam);

/// Variable indices of one vertex's level block.
std::vector<int> blockVars(const RingPtr& ring, int vertex, int level);
/// All variable indices of one vertex (all levels).
std::vector<int> vertexVars(const RingPtr& ring, int vertex);

/// Grassmann-Plücker and incidence exchange relations for one vertex's
/// blocks; vanishes exactly on Plücker vectors of flags of the given type.
std::vector<Polynomial> flagIdealGenerators(const RingPtr& ring, int vertex,
                                            const FlagType& flag);

/// Plücker vector per level: maximal minors of the first k_t rows of a
/// random small-integer invertible matrix (nested rows force incidence).
std::vector<std::vector<Rational>> randomFlagPoint(const FlagType& flag, Rng& rng);

/// Plücker coordinates of an explicit matrix (first k_t rows per level).
std::vector<std::vector<Rational>> flagPointOfMatrix(
    const FlagType& flag, const std::vector<std::vector<Rational>>& mat);

}  // namespace mustafin

#endif

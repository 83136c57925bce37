#ifndef MUSTAFIN_BUILDING_HPP
#define MUSTAFIN_BUILDING_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mustafin/qt.hpp"

namespace mustafin {

/// Diagonal lattice [⊕ R·t^{a_i} e_i], exponents normalized to min 0.
struct ApartmentVertex {
  std::vector<int> a;

  static ApartmentVertex normalized(std::vector<int> exps) {
    int mn = exps.empty() ? 0 : *std::min_element(exps.begin(), exps.end());
    for (auto& e : exps) e -= mn;
    return ApartmentVertex{std::move(exps)};
  }
  int dim() const { return (int)a.size(); }
  bool operator==(const ApartmentVertex& o) const { return a == o.a; }
  bool operator<(const ApartmentVertex& o) const { return a < o.a; }
  std::string str() const;
};

/// Columns form a basis of a rank-d lattice in K^d; entries Laurent in t.
struct LatticeBasis {
  int d;
  QtMatrix m;

  static LatticeBasis diagonal(const std::vector<int>& exps);
  static LatticeBasis fromMatrix(QtMatrix mat);  // throws if singular
};

/// Homothety class of a lattice.
struct Vertex {
  LatticeBasis basis;
  std::optional<ApartmentVertex> diag;  // set when known diagonal

  static Vertex apartment(const ApartmentVertex& v) {
    return Vertex{LatticeBasis::diagonal(v.a), v};
  }
  static Vertex fromBasis(LatticeBasis b) { return Vertex{std::move(b), {}}; }
  std::string str() const;
};

bool vertexEqual(const Vertex& v1, const Vertex& v2);

struct AdjacencyResult {
  bool adjacent;
  int distance;
};
AdjacencyResult adjacencyAndDistance(const Vertex& v1, const Vertex& v2);

/// Ordered configuration of pairwise distinct vertices.
struct Configuration {
  int d;
  std::vector<Vertex> vertices;

  static Configuration make(int d, std::vector<Vertex> verts);  // validates
  bool allDiagonal() const;
  std::vector<ApartmentVertex> diagonals() const;
  int size() const { return (int)vertices.size(); }
};

enum class HullVariant { Min, Max };

/// All vertices expressible as coordinatewise min (resp. max) of shifted
/// input vectors, enumerated over integer shift offsets within the
/// configuration's coordinate range.
std::set<ApartmentVertex> tropicalHull(const std::vector<ApartmentVertex>& config,
                                       HullVariant variant);

/// Union of both tropical hulls plus the distance <= radius apartment
/// neighborhoods of the hull members, minus the configuration itself.
/// Non-apartment configurations fall back to neighborhoods of Γ in each
/// vertex's own basis (documented limitation).
std::vector<Vertex> secondaryCandidates(const Configuration& config, int radius);

}  // namespace mustafin

#endif

#include "mustafin/building.hpp"

#include <functional>
#include <stdexcept>

namespace mustafin {

std::string ApartmentVertex::str() const {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

LatticeBasis LatticeBasis::diagonal(const std::vector<int>& exps) {
  int d = (int)exps.size();
  QtMatrix m(d, std::vector<QtRat>(d));
  for (int i = 0; i < d; ++i) m[i][i] = QtRat(QtPoly::tpow(exps[i]));
  return LatticeBasis{d, std::move(m)};
}

LatticeBasis LatticeBasis::fromMatrix(QtMatrix mat) {
  int d = (int)mat.size();
  if (d < 2) throw std::invalid_argument("lattice dimension must be >= 2");
  for (auto& row : mat)
    if ((int)row.size() != d) throw std::invalid_argument("non-square matrix");
  if (determinant(mat).isZero())
    throw std::invalid_argument("singular lattice basis");
  return LatticeBasis{d, std::move(mat)};
}

std::string Vertex::str() const {
  if (diag) return diag->str();
  return "[matrix lattice]";
}

namespace {

std::vector<int> transitionExponents(const Vertex& v1, const Vertex& v2) {
  if (v1.basis.d != v2.basis.d)
    throw std::invalid_argument("dimension mismatch");
  QtMatrix t = matMul(inverse(v1.basis.m), v2.basis.m);
  return elementaryDivisorExponents(t);
}

}  // namespace

bool vertexEqual(const Vertex& v1, const Vertex& v2) {
  auto e = transitionExponents(v1, v2);
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i] != e[0]) return false;
  return true;
}

AdjacencyResult adjacencyAndDistance(const Vertex& v1, const Vertex& v2) {
  auto e = transitionExponents(v1, v2);
  int mn = e.front();
  int dist = e.back() - mn;
  return {dist == 1, dist};
}

Configuration Configuration::make(int d, std::vector<Vertex> verts) {
  if (verts.empty()) throw std::invalid_argument("empty configuration");
  for (auto& v : verts)
    if (v.basis.d != d) throw std::invalid_argument("dimension mismatch");
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (vertexEqual(verts[i], verts[j]))
        throw std::invalid_argument("duplicate vertices " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1));
  return Configuration{d, std::move(verts)};
}

bool Configuration::allDiagonal() const {
  for (auto& v : vertices)
    if (!v.diag) return false;
  return true;
}

std::vector<ApartmentVertex> Configuration::diagonals() const {
  std::vector<ApartmentVertex> out;
  for (auto& v : vertices) {
    if (!v.diag) throw std::logic_error("non-diagonal vertex");
    out.push_back(*v.diag);
  }
  return out;
}

std::set<ApartmentVertex> tropicalHull(const std::vector<ApartmentVertex>& config,
                                       HullVariant variant) {
  if (config.empty()) return {};
  int d = config[0].dim();
  for (auto& v : config)
    if (v.dim() != d) throw std::invalid_argument("mixed dimensions");
  int lo = config[0].a[0], hi = lo;
  for (auto& v : config)
    for (int x : v.a) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  int range = hi - lo;
  int n = (int)config.size();
  // membership by nearest-point projection: for the min variant, with
  // lambda_j = max_i (x_i - a^{(j)}_i) each shifted generator dominates x
  // coordinatewise and x lies in the hull iff min_j (lambda_j + a^{(j)})
  // recovers x (dually for max)
  auto member = [&](const std::vector<int>& x) {
    for (int i = 0; i < d; ++i) {
      int best = 0;
      bool haveBest = false;
      for (int j = 0; j < n; ++j) {
        int lam = x[0] - config[j].a[0];
        for (int i2 = 1; i2 < d; ++i2) {
          int v = x[i2] - config[j].a[i2];
          lam = variant == HullVariant::Min ? std::max(lam, v) : std::min(lam, v);
        }
        int proj = lam + config[j].a[i];
        if (!haveBest)
          best = proj, haveBest = true;
        else
          best = variant == HullVariant::Min ? std::min(best, proj)
                                             : std::max(best, proj);
      }
      if (best != x[i]) return false;
    }
    return true;
  };
  std::set<ApartmentVertex> out;
  // hull points normalized to min 0 have entries within the input spread
  std::vector<int> x(d, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      if (member(x)) out.insert(ApartmentVertex::normalized(x));
      return;
    }
    for (int v = 0; v <= range; ++v) {
      x[i] = v;
      rec(i + 1);
    }
    x[i] = 0;
  };
  rec(0);
  return out;
}

std::vector<Vertex> secondaryCandidates(const Configuration& config, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  int d = config.d;
  std::vector<Vertex> out;
  auto pushUnique = [&](const Vertex& v) {
    for (auto& g : config.vertices)
      if (vertexEqual(g, v)) return;
    for (auto& o : out)
      if (vertexEqual(o, v)) return;
    out.push_back(v);
  };
  // apartment neighborhoods: all normalized offsets with max entry <= radius
  auto pushNeighborhood = [&](const ApartmentVertex& center) {
    std::vector<int> off(d, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == d) {
        std::vector<int> pt(d);
        for (int k = 0; k < d; ++k) pt[k] = center.a[k] + off[k];
        pushUnique(Vertex::apartment(ApartmentVertex::normalized(std::move(pt))));
        return;
      }
      for (int e = -radius; e <= radius; ++e) {
        off[i] = e;
        rec(i + 1);
      }
      off[i] = 0;
    };
    rec(0);
  };
  if (config.allDiagonal()) {
    auto diag = config.diagonals();
    std::set<ApartmentVertex> hull;
    for (auto variant : {HullVariant::Min, HullVariant::Max})
      for (auto& v : tropicalHull(diag, variant)) hull.insert(v);
    for (auto& h : hull) pushUnique(Vertex::apartment(h));
    if (radius > 0)
      for (auto& h : hull) pushNeighborhood(h);
  } else {
    // limitation: only neighborhoods of Γ in each vertex's own diagonal frame
    if (radius > 0) {
      for (auto& v : config.vertices) {
        // offsets scaled through the vertex basis: B * diag(t^off)
        std::vector<int> off(d, 0);
        std::function<void(int)> rec = [&](int k) {
          if (k == d) {
            QtMatrix m = v.basis.m;
            for (int c = 0; c < d; ++c)
              for (int r = 0; r < d; ++r)
                m[r][c] = m[r][c] * QtRat(QtPoly::tpow(off[c]));
            pushUnique(Vertex::fromBasis(LatticeBasis::fromMatrix(std::move(m))));
            return;
          }
          for (int e = 0; e <= radius; ++e) {
            off[k] = e;
            rec(k + 1);
          }
          off[k] = 0;
        };
        rec(0);
      }
    }
  }
  return out;
}

}  // namespace mustafin

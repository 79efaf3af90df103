#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/linalg.hpp"
#include "spectra/rational.hpp"
#include "spectra/unipoly.hpp"

namespace spectra {

/// Largest ambient dimension accepted by buildPolytope unless overridden.
inline constexpr int kDefaultMaxDimension = 4;

/// Hyperplane presentation P = ∩_F {x : <u_F, x> <= 1}.
struct FacetPresentation {
  std::vector<QVector> normals;
  /// For each facet, the sorted indices of the vertices lying on it.
  std::vector<std::vector<int>> facetVertexSets;
};

struct PolytopeClassification {
  bool isSimplicial = false;
  bool isFano = false;
  bool isReflexive = false;
  bool isSmoothFano = false;
};

struct LatticePoint {
  IntVector point;
  Rational nu;
};

struct EhrhartData {
  std::vector<std::int64_t> deltaVector;  // δ_0..δ_n
  std::vector<std::int64_t> dilateCounts;  // card(mP ∩ Z^n), m = 0..n
};

/// Full-dimensional lattice polytope with the origin in its strict interior.
/// Vertices are the extreme points in lexicographic order.
class LatticePolytope {
 public:
  /// Integer form of a facet: <normal, x> <= height with a primitive normal.
  struct IntFacet {
    IntVector normal;
    std::int64_t height;
  };

  int dimension() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const FacetPresentation& facets() const { return facets_; }
  const std::vector<IntFacet>& intFacets() const { return intFacets_; }

  /// ν(v) = max_F <u_F, v>.
  Rational newtonValue(std::span<const std::int64_t> v) const {
    if (static_cast<int>(v.size()) != dim_) throw DimensionError("newtonValue: wrong vector length");
    // Compare (a·v)/c across facets with integer cross multiplication.
    __int128 bestNum = 0, bestDen = 0;
    for (const auto& f : intFacets_) {
      __int128 num = 0;
      for (int i = 0; i < dim_; ++i) num += static_cast<__int128>(f.normal[i]) * v[i];
      if (bestDen == 0 || num * bestDen > bestNum * f.height) {
        bestNum = num;
        bestDen = f.height;
      }
    }
    return Rational(static_cast<std::int64_t>(bestNum), static_cast<std::int64_t>(bestDen));
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

  friend LatticePolytope buildPolytope(const std::vector<IntVector>&, int);

 private:
  int dim_ = 0;
  std::vector<IntVector> vertices_;
  FacetPresentation facets_;
  std::vector<IntFacet> intFacets_;
};

namespace detail {

inline void forEachCombination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Affine dimension of a finite point set (-1 when empty).
inline int affineDimension(const std::vector<QVector>& pts) {
  if (pts.empty()) return -1;
  QMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVector d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(matRank(std::move(diffs)));
}

/// Normal of the hyperplane through n points of Z^n (generalized cross
/// product of the difference vectors). Zero when the points are affinely
/// dependent.
inline IntVector hyperplaneNormal(const std::vector<const IntVector*>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<IntVector> diffs;
  for (int k = 1; k < n; ++k) {
    IntVector d(n);
    for (int j = 0; j < n; ++j) d[j] = (*pts[k])[j] - (*pts[0])[j];
    diffs.push_back(std::move(d));
  }
  IntVector normal(n);
  for (int col = 0; col < n; ++col) {
    std::vector<IntVector> minor;
    for (const auto& d : diffs) {
      IntVector row;
      for (int j = 0; j < n; ++j)
        if (j != col) row.push_back(d[j]);
      minor.push_back(std::move(row));
    }
    const auto det = toInt64(matDet(minor));
    normal[col] = (col % 2 == 0) ? det : -det;
  }
  return normal;
}

/// Splits a face, given by vertex indices and its dimension, into simplices
/// by pulling from its first vertex. `facets` are the vertex sets of all
/// facets of the ambient polytope.
inline void triangulateFace(const std::vector<int>& face, int dim, const std::vector<QVector>& verts,
                            const std::vector<std::vector<int>>& facets, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(face.size()) == dim + 1) {
    std::vector<int> simplex = prefix;
    simplex.insert(simplex.end(), face.begin(), face.end());
    out.push_back(std::move(simplex));
    return;
  }
  const int apex = face.front();
  std::set<std::vector<int>> subfaces;
  for (const auto& f : facets) {
    std::vector<int> g;
    std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(g));
    if (g.empty() || std::binary_search(g.begin(), g.end(), apex)) continue;
    std::vector<QVector> pts;
    for (int i : g) pts.push_back(verts[i]);
    if (affineDimension(pts) == dim - 1) subfaces.insert(std::move(g));
  }
  prefix.push_back(apex);
  for (const auto& g : subfaces) triangulateFace(g, dim - 1, verts, facets, prefix, out);
  prefix.pop_back();
}

/// n!·vol of a polytope containing the origin in its interior, as the sum of
/// |det| over a triangulation of its boundary coned from the origin.
inline Rational coneVolumeSum(const std::vector<QVector>& verts, const std::vector<std::vector<int>>& facets,
                              int n) {
  Rational total;
  std::vector<std::vector<int>> simplices;
  std::vector<int> prefix;
  for (const auto& f : facets) triangulateFace(f, n - 1, verts, facets, prefix, simplices);
  for (const auto& s : simplices) {
    QMatrix m;
    for (int i : s) m.push_back(verts[i]);
    total += matDet(std::move(m)).abs();
  }
  return total;
}

}  // namespace detail

/// Builds the canonical polytope conv(points). Non-extreme input points are
/// dropped.
inline LatticePolytope buildPolytope(const std::vector<IntVector>& points, int maxDimension = kDefaultMaxDimension) {
  if (points.empty()) throw InvalidPolytopeError("empty vertex list");
  const int n = static_cast<int>(points.front().size());
  if (n == 0) throw InvalidPolytopeError("zero-dimensional vertices");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw InvalidPolytopeError("vertices have different lengths");
  if (n > maxDimension)
    throw UnsupportedError("dimension " + std::to_string(n) + " exceeds the supported maximum " +
                           std::to_string(maxDimension));

  std::vector<IntVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<QVector> qpts;
  for (const auto& p : pts) qpts.push_back(toQVector(p));
  if (detail::affineDimension(qpts) != n) throw InvalidPolytopeError("points are not full-dimensional");

  // Supporting hyperplanes through n affinely independent points.
  std::map<std::pair<IntVector, std::int64_t>, bool> hyperplanes;
  const int m = static_cast<int>(pts.size());
  detail::forEachCombination(m, n, [&](const std::vector<int>& idx) {
    std::vector<const IntVector*> sel;
    for (int i : idx) sel.push_back(&pts[i]);
    IntVector a = detail::hyperplaneNormal(sel);
    if (gcdOf(a) == 0) return;
    std::int64_t c = 0;
    for (int j = 0; j < n; ++j) c += a[j] * pts[idx[0]][j];
    bool below = true, above = true;
    for (const auto& p : pts) {
      std::int64_t s = -c;
      for (int j = 0; j < n; ++j) s += a[j] * p[j];
      if (s > 0) below = false;
      if (s < 0) above = false;
    }
    if (!below && !above) return;
    if (!below) {
      for (auto& x : a) x = -x;
      c = -c;
    }
    const std::int64_t g = gcdOf(a);
    for (auto& x : a) x /= g;
    c /= g;
    hyperplanes.emplace(std::make_pair(std::move(a), c), true);
  });

  for (const auto& [key, _] : hyperplanes)
    if (key.second <= 0) throw InvalidPolytopeError("origin is not in the strict interior of the polytope");

  struct Raw {
    QVector u;
    IntVector normal;
    std::int64_t height;
  };
  std::vector<Raw> raw;
  for (const auto& [key, _] : hyperplanes) {
    QVector u;
    for (auto x : key.first) u.push_back(Rational(x, key.second));
    raw.push_back({std::move(u), key.first, key.second});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.u < b.u; });

  auto onFacet = [&](const Raw& f, const IntVector& p) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += f.normal[j] * p[j];
    return s == f.height;
  };

  LatticePolytope P;
  P.dim_ = n;
  for (const auto& p : pts) {
    QMatrix incident;
    for (const auto& f : raw)
      if (onFacet(f, p)) incident.push_back(f.u);
    if (static_cast<int>(matRank(std::move(incident))) == n) P.vertices_.push_back(p);
  }
  for (const auto& f : raw) {
    std::vector<int> on;
    for (int i = 0; i < static_cast<int>(P.vertices_.size()); ++i)
      if (onFacet(f, P.vertices_[i])) on.push_back(i);
    P.facets_.normals.push_back(f.u);
    P.facets_.facetVertexSets.push_back(std::move(on));
    P.intFacets_.push_back({f.normal, f.height});
  }
  return P;
}

inline const FacetPresentation& facetPresentation(const LatticePolytope& P) { return P.facets(); }

inline Rational newtonValue(const LatticePolytope& P, std::span<const std::int64_t> v) { return P.newtonValue(v); }

/// μ_P = n!·vol(P).
inline Integer normalizedVolume(const LatticePolytope& P) {
  std::vector<QVector> verts;
  for (const auto& v : P.vertices()) verts.push_back(toQVector(v));
  const Rational vol = detail::coneVolumeSum(verts, P.facets().facetVertexSets, P.dimension());
  if (!vol.isInteger()) throw InternalError("normalized volume of a lattice polytope is not an integer");
  return vol.num();
}

struct PolarPolytope {
  std::vector<QVector> vertices;
  Rational normalizedVolume;
};

/// P° = {m : <m, x> <= 1 on P}; its vertices are the facet normals of P and
/// its facets correspond to the vertices of P.
inline PolarPolytope polarPolytope(const LatticePolytope& P) {
  const auto& fp = P.facets();
  std::vector<std::vector<int>> polarFacets(P.vertices().size());
  for (int f = 0; f < static_cast<int>(fp.facetVertexSets.size()); ++f)
    for (int v : fp.facetVertexSets[f]) polarFacets[v].push_back(f);
  return {fp.normals, detail::coneVolumeSum(fp.normals, polarFacets, P.dimension())};
}

inline PolytopeClassification classifyPolytope(const LatticePolytope& P) {
  const int n = P.dimension();
  const auto& fp = P.facets();
  PolytopeClassification c;
  c.isSimplicial = std::all_of(fp.facetVertexSets.begin(), fp.facetVertexSets.end(),
                               [n](const auto& s) { return static_cast<int>(s.size()) == n; });
  c.isFano = std::all_of(P.vertices().begin(), P.vertices().end(),
                         [](const IntVector& v) { return gcdOf(v) == 1; });
  c.isReflexive = std::all_of(fp.normals.begin(), fp.normals.end(), [](const QVector& u) {
    return std::all_of(u.begin(), u.end(), [](const Rational& x) { return x.isInteger(); });
  });
  c.isSmoothFano = c.isSimplicial && std::all_of(fp.facetVertexSets.begin(), fp.facetVertexSets.end(),
                                                 [&](const std::vector<int>& s) {
                                                   std::vector<IntVector> rows;
                                                   for (int i : s) rows.push_back(P.vertices()[i]);
                                                   return matDet(rows).abs() == Rational(1);
                                                 });
  return c;
}

/// All v in Z^n with ν(v) <= bound, scanned over the bounding box of bound·P.
inline std::vector<LatticePoint> latticePointsWithNu(const LatticePolytope& P, const Rational& bound) {
  if (bound.sign() < 0) throw ParameterError("latticePointsWithNu: negative bound");
  const int n = P.dimension();
  IntVector lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Rational mn, mx;
    bool first = true;
    for (const auto& v : P.vertices()) {
      Rational x = bound * Rational(v[j]);
      if (first || x < mn) mn = x;
      if (first || x > mx) mx = x;
      first = false;
    }
    lo[j] = toInt64(mn.floor());
    hi[j] = toInt64(mx.ceil());
  }
  std::vector<LatticePoint> out;
  IntVector cur = lo;
  while (true) {
    Rational nu = P.newtonValue(cur);
    if (nu <= bound) out.push_back({cur, std::move(nu)});
    int j = n - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

/// δ-vector from the dilate counts card(mP ∩ Z^n), m = 0..n.
inline EhrhartData ehrhartDelta(const LatticePolytope& P) {
  const int n = P.dimension();
  const auto pts = latticePointsWithNu(P, Rational(n));
  EhrhartData e;
  e.dilateCounts.assign(n + 1, 0);
  for (const auto& lp : pts) {
    const auto first = toInt64(lp.nu.ceil());
    for (auto m = first; m <= n; ++m) ++e.dilateCounts[m];
  }
  // (1-z)^{n+1} · Σ counts_m z^m, truncated to degree n.
  std::vector<std::int64_t> binom(n + 2);
  binom[0] = 1;
  for (int k = 1; k <= n + 1; ++k) binom[k] = binom[k - 1] * (n + 2 - k) / k;
  e.deltaVector.assign(n + 1, 0);
  for (int d = 0; d <= n; ++d)
    for (int k = 0; k <= d; ++k) e.deltaVector[d] += (k % 2 == 0 ? 1 : -1) * binom[k] * e.dilateCounts[d - k];
  return e;
}

inline bool isPalindromic(const std::vector<std::int64_t>& v) {
  return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin());
}

}  // namespace spectra

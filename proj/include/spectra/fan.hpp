#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/linalg.hpp"
#include "spectra/polytope.hpp"
#include "spectra/unipoly.hpp"

namespace spectra {

/// Simplicial cone spanned by a set of vertices of P (the stacky generators).
struct Cone {
  std::vector<int> generators;  // sorted vertex indices; empty for the zero cone

  int dimension() const { return static_cast<int>(generators.size()); }
  bool contains(const Cone& face) const {
    return std::includes(generators.begin(), generators.end(), face.generators.begin(), face.generators.end());
  }
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

/// Face fan of a simplicial polytope: the cones over its proper faces.
struct FaceFan {
  LatticePolytope polytope;
  std::vector<std::vector<Cone>> conesByDimension;  // index 0..n

  const std::vector<Cone>& maximalCones() const { return conesByDimension.back(); }
  std::vector<Cone> allCones() const {
    std::vector<Cone> out;
    for (const auto& level : conesByDimension) out.insert(out.end(), level.begin(), level.end());
    return out;
  }
};

struct BoxPoint {
  IntVector vector;
  Rational nu;  // Σ coefficients
  std::vector<Rational> coefficients;
};

enum class BoxMode { Open, HalfOpen };

/// Lattice points Σ q_i g_i with every q_i in [0,1) (half-open) or (0,1)
/// (open). The generators must be linearly independent. For no generators
/// the result is {0} in both modes.
///
/// With B_R a nonsingular r×r block of rows of the generator matrix and
/// d = |det B_R|, every box point has q in (1/d)Z^r, and the admissible q mod 1
/// lie in the group generated by the columns of B_R^{-1}. That group is
/// enumerated by closure and its elements filtered for integrality.
inline std::vector<BoxPoint> boxPointsOf(const std::vector<IntVector>& gens, int ambientDim, BoxMode mode) {
  const int r = static_cast<int>(gens.size());
  if (r == 0) return {BoxPoint{IntVector(ambientDim, 0), Rational(0), {}}};

  std::vector<int> rows;
  Rational bestDet;
  detail::forEachCombination(ambientDim, r, [&](const std::vector<int>& idx) {
    std::vector<IntVector> block(r, IntVector(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) block[i][j] = gens[j][idx[i]];
    const Rational det = matDet(block).abs();
    if (!det.isZero() && (rows.empty() || det < bestDet)) {
      rows = idx;
      bestDet = det;
    }
  });
  if (rows.empty()) throw ParameterError("box: generators are dependent");
  const std::int64_t d = toInt64(bestDet);

  QMatrix block(r, QVector(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) block[i][j] = gens[j][rows[i]];
  const QMatrix inv = matInverse(block);
  std::vector<IntVector> steps(r, IntVector(r));
  for (int col = 0; col < r; ++col)
    for (int i = 0; i < r; ++i) {
      const Rational x = inv[i][col] * Rational(d);
      if (!x.isInteger()) throw InternalError("box: scaled inverse is not integral");
      steps[col][i] = ((toInt64(x) % d) + d) % d;
    }

  std::set<IntVector> group{IntVector(r, 0)};
  std::vector<IntVector> frontier{IntVector(r, 0)};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& k : frontier)
      for (const auto& step : steps) {
        IntVector m(r);
        for (int i = 0; i < r; ++i) m[i] = (k[i] + step[i]) % d;
        if (group.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }

  std::vector<BoxPoint> out;
  for (const auto& k : group) {
    if (mode == BoxMode::Open && std::any_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; })) continue;
    IntVector p(ambientDim);
    bool integral = true;
    for (int c = 0; c < ambientDim && integral; ++c) {
      std::int64_t s = 0;
      for (int i = 0; i < r; ++i) s += k[i] * gens[i][c];
      if (s % d != 0) integral = false;
      p[c] = s / d;
    }
    if (!integral) continue;
    std::vector<Rational> q;
    Rational nu;
    for (auto x : k) {
      q.emplace_back(x, d);
      nu += q.back();
    }
    out.push_back({std::move(p), std::move(nu), std::move(q)});
  }
  std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) { return a.vector < b.vector; });
  return out;
}

inline FaceFan faceFan(const LatticePolytope& P) {
  const int n = P.dimension();
  const auto& facets = P.facets().facetVertexSets;
  for (const auto& f : facets)
    if (static_cast<int>(f.size()) != n) throw UnsupportedError("face fan requires a simplicial polytope");
  std::vector<std::set<std::vector<int>>> levels(n + 1);
  for (const auto& f : facets) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      levels[sub.size()].insert(std::move(sub));
    }
  }
  FaceFan fan{P, {}};
  for (const auto& level : levels) {
    std::vector<Cone> cones;
    for (const auto& g : level) cones.push_back(Cone{g});
    fan.conesByDimension.push_back(std::move(cones));
  }
  return fan;
}

inline std::vector<IntVector> coneGenerators(const FaceFan& fan, const Cone& sigma) {
  std::vector<IntVector> gens;
  for (int i : sigma.generators) gens.push_back(fan.polytope.vertices().at(i));
  return gens;
}

/// Box(σ) (half-open) or box(σ) (open) with respect to the stacky generators.
inline std::vector<BoxPoint> boxPoints(const FaceFan& fan, const Cone& sigma, BoxMode mode) {
  return boxPointsOf(coneGenerators(fan, sigma), fan.polytope.dimension(), mode);
}

/// h_σ(z) = Σ_{τ ⊇ σ} (z-1)^{n - dim τ}.
inline UniPoly hodgeDelignePoly(const FaceFan& fan, const Cone& sigma) {
  const int n = fan.polytope.dimension();
  const UniPoly zMinusOne({Rational(-1), Rational(1)});
  std::vector<UniPoly> powers{UniPoly(Rational(1))};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * zMinusOne);
  UniPoly h;
  for (const auto& level : fan.conesByDimension)
    for (const auto& tau : level)
      if (tau.contains(sigma)) h += powers[n - tau.dimension()];
  for (const auto& c : h.coeffs())
    if (c.sign() < 0 || !c.isInteger()) throw InternalError("h-polynomial has a negative coefficient");
  return h;
}

}  // namespace spectra

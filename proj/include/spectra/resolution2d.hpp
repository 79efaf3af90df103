#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/fan.hpp"
#include "spectra/linalg.hpp"
#include "spectra/polytope.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// Complete fan in Z^2 given by primitive rays in counterclockwise order,
/// each labelled with the Newton function value of its generator.
struct Fan2D {
  LatticePolytope polytope;
  std::vector<IntVector> rays;
  std::vector<Rational> nu;
};

struct SmoothResolution2D {
  Fan2D fan;
  std::vector<bool> inserted;
  std::vector<std::int64_t> selfIntersections;  // D_i^2
  int r = 0;
  std::int64_t c1Squared = 0;
};

enum class InsertionPolicy { MinNu, MaxNu };

namespace detail {

inline std::int64_t det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

inline bool angleLess(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  if (half(a) != half(b)) return half(a) < half(b);
  return det2(a, b) > 0;
}

inline void refineCone(const LatticePolytope& P, const IntVector& v, const IntVector& w, InsertionPolicy policy,
                       std::vector<IntVector>& out) {
  const auto d = det2(v, w);
  if (d <= 0) throw InternalError("resolution: consecutive rays are not counterclockwise");
  if (d == 1) return;
  const auto box = boxPointsOf({v, w}, 2, BoxMode::Open);
  if (box.empty()) throw InternalError("resolution: non-unimodular cone with empty box");
  const BoxPoint* best = nullptr;
  Rational bestNu;
  for (const auto& bp : box) {
    Rational nu = P.newtonValue(bp.vector);
    const bool better = best == nullptr ||
                        (policy == InsertionPolicy::MinNu ? nu < bestNu : nu > bestNu) ||
                        (nu == bestNu && bp.vector < best->vector);
    if (better) {
      best = &bp;
      bestNu = std::move(nu);
    }
  }
  const IntVector ray = primitive(best->vector);
  refineCone(P, v, ray, policy, out);
  out.push_back(ray);
  refineCone(P, ray, w, policy, out);
}

}  // namespace detail

inline Fan2D buildFan2D(const LatticePolytope& P) {
  if (P.dimension() != 2) throw UnsupportedError("2D fan requires a two-dimensional polytope");
  Fan2D fan{P, {}, {}};
  for (const auto& v : P.vertices()) fan.rays.push_back(primitive(v));
  std::sort(fan.rays.begin(), fan.rays.end(), detail::angleLess);
  for (const auto& ray : fan.rays) fan.nu.push_back(P.newtonValue(ray));
  return fan;
}

/// Smooth refinement by repeated insertion of box points into non-unimodular
/// cones. Inserted rays get ν from the polytope's Newton function.
inline SmoothResolution2D resolveFan2D(const Fan2D& fan, InsertionPolicy policy = InsertionPolicy::MinNu) {
  SmoothResolution2D res;
  res.fan.polytope = fan.polytope;
  const std::size_t k = fan.rays.size();
  for (std::size_t i = 0; i < k; ++i) {
    const IntVector& v = fan.rays[i];
    const IntVector& w = fan.rays[(i + 1) % k];
    res.fan.rays.push_back(v);
    res.inserted.push_back(false);
    std::vector<IntVector> extra;
    detail::refineCone(fan.polytope, v, w, policy, extra);
    for (auto& ray : extra) {
      res.fan.rays.push_back(std::move(ray));
      res.inserted.push_back(true);
    }
  }
  for (const auto& ray : res.fan.rays) res.fan.nu.push_back(fan.polytope.newtonValue(ray));

  const int r = static_cast<int>(res.fan.rays.size());
  res.r = r;
  std::int64_t sum = 0;
  for (int i = 0; i < r; ++i) {
    const IntVector& prev = res.fan.rays[(i + r - 1) % r];
    const IntVector& cur = res.fan.rays[i];
    const IntVector& next = res.fan.rays[(i + 1) % r];
    if (detail::det2(cur, next) != 1) throw InternalError("resolution is not smooth");
    const std::int64_t b = detail::det2(prev, next);
    if (prev[0] + next[0] != b * cur[0] || prev[1] + next[1] != b * cur[1])
      throw InternalError("ray relation v_{i-1} + v_{i+1} = -D_i^2 v_i fails");
    res.selfIntersections.push_back(-b);
    sum -= b;
  }
  res.c1Squared = sum + 2 * r;
  return res;
}

inline SmoothResolution2D resolveFan2D(const LatticePolytope& P, InsertionPolicy policy = InsertionPolicy::MinNu) {
  return resolveFan2D(buildFan2D(P), policy);
}

/// c_1^2(Y) - 2r + Σ (ν_i/ν_{i+1} + ν_{i+1}/ν_i).
inline Rational muHat2DSumForm(const SmoothResolution2D& res) {
  const auto& nu = res.fan.nu;
  Rational s(res.c1Squared - 2 * res.r);
  for (int i = 0; i < res.r; ++i) {
    const Rational& a = nu[i];
    const Rational& b = nu[(i + 1) % res.r];
    s += a / b + b / a;
  }
  return s;
}

/// (Σ ν_i D_i)·(Σ ν_j^{-1} D_j) from the intersection matrix of the
/// boundary divisors.
inline Rational muHat2DProductForm(const SmoothResolution2D& res) {
  const int r = res.r;
  const auto& nu = res.fan.nu;
  auto intersection = [&](int i, int j) -> std::int64_t {
    if (i == j) return res.selfIntersections[i];
    return ((i + 1) % r == j || (j + 1) % r == i) ? 1 : 0;
  };
  Rational s;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto dij = intersection(i, j);
      if (dij != 0) s += nu[i] / nu[j] * Rational(dij);
    }
  return s;
}

inline Rational muHat2D(const SmoothResolution2D& res) {
  Rational a = muHat2DSumForm(res);
  if (a != muHat2DProductForm(res)) throw InternalError("the two expressions for mu-hat disagree");
  return a;
}

namespace detail {

/// One J-term of the stacky E-function: E(D_J) Π_{j ∈ J} f(ν_j), where
/// E(D_J) is 1+z for a single ray and 1 for an adjacent pair.
struct StringyTerm {
  bool curve;
  std::vector<Rational> nus;
};

inline std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powMod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, x = mulMod(x, x, p))
    if (e & 1) r = mulMod(r, x, p);
  return r;
}

/// Power series of Σ_j (1 + t^D)^{curve_j} Π_i (t^D - t^{a_ij}) / (t^{a_ij} - 1)
/// up to degree len - 1, integer coefficients.
inline std::vector<std::int64_t> stringySeries(const std::vector<StringyTerm>& terms,
                                               const std::vector<std::vector<std::int64_t>>& exps, std::int64_t D,
                                               std::size_t len) {
  std::vector<std::int64_t> sum(len, 0), s(len);
  const auto last = static_cast<std::int64_t>(len) - 1;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::fill(s.begin(), s.end(), 0);
    s[0] = 1;
    std::int64_t deg = 0;
    auto mulBinomial = [&](std::int64_t p, std::int64_t cp, std::int64_t q, std::int64_t cq) {
      // s *= cp t^p + cq t^q
      const std::int64_t newDeg = std::min(deg + std::max(p, q), last);
      for (std::int64_t k = newDeg; k >= 0; --k) {
        std::int64_t v = 0;
        if (k - q >= 0 && k - q <= deg) v += cq * s[k - q];
        if (k - p >= 0 && k - p <= deg) v += cp * s[k - p];
        s[k] = v;
      }
      deg = newDeg;
    };
    if (terms[j].curve) mulBinomial(0, 1, D, 1);
    // (t^D - t^a) / (t^a - 1) = (t^a - t^D) / (1 - t^a)
    for (const auto a : exps[j]) mulBinomial(a, 1, D, -1);
    for (const auto a : exps[j])
      for (auto k = static_cast<std::size_t>(a); k < len; ++k) s[k] += s[k - a];
    for (std::size_t k = 0; k < len; ++k) sum[k] += s[k];
  }
  return sum;
}

inline constexpr std::int64_t kStringyExactBudget = 40'000'000;

/// Sums terms exactly in t = z^{1/D}, D the lcm of their ν denominators.
///
/// Each term is N_j(t) / Π (t^{a_i} - 1) with a_i = D ν_i, and grows at most
/// like t^{2D} at infinity, so the sum is P/Q with Q the lcm of the
/// denominators and deg P <= deg Q + 2D. The candidate polynomial is the
/// power series truncated at degree 2D. It is certified exactly by checking
/// that the series vanishes in degrees 2D+1 .. deg Q + 2D; when that window is
/// too long (very fine refinements), the sum and the candidate are instead
/// compared at pseudo-random points modulo the prime 2^61 - 1.
inline Puiseux sumStringyTerms(const std::vector<StringyTerm>& terms,
                               std::int64_t exactBudget = kStringyExactBudget) {
  Integer Dz(1);
  for (const auto& term : terms)
    for (const auto& nu : term.nus) Dz = lcm(Dz, nu.den());
  const std::int64_t D = toInt64(Dz);

  std::vector<std::vector<std::int64_t>> exps;
  std::int64_t maxA = 1;
  for (const auto& term : terms) {
    auto& e = exps.emplace_back();
    for (const auto& nu : term.nus) {
      if (nu.sign() <= 0) throw InternalError("stringy E-function needs positive ray labels");
      e.push_back(toInt64(nu * Rational(D)));
      maxA = std::max(maxA, e.back());
    }
  }
  const std::int64_t top = 2 * D;
  std::int64_t degQ = 0;
  std::vector<std::int64_t> phi(maxA + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::int64_t d = 2; d <= maxA; ++d)
    if (phi[d] == d)
      for (std::int64_t m = d; m <= maxA; m += d) phi[m] -= phi[m] / d;
  std::vector<std::int64_t> mult(maxA + 1, 0);
  for (const auto& e : exps) {
    std::map<std::int64_t, std::int64_t> local;
    for (const auto a : e)
      for (std::int64_t d = 1; d * d <= a; ++d)
        if (a % d == 0) {
          ++local[d];
          if (d * d != a) ++local[a / d];
        }
    for (const auto& [d, c] : local) mult[d] = std::max(mult[d], c);
  }
  for (std::int64_t d = 1; d <= maxA; ++d) degQ += phi[d] * mult[d];

  const std::int64_t window = degQ + top + 1;
  const bool exact = window * static_cast<std::int64_t>(terms.size() + 1) <= exactBudget;
  const auto sum = stringySeries(terms, exps, D, static_cast<std::size_t>(exact ? window : top + 1));
  if (exact) {
    for (auto k = static_cast<std::size_t>(top) + 1; k < sum.size(); ++k)
      if (sum[k] != 0) throw InternalError("stringy E-function group does not reduce to a polynomial");
  } else {
    constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
    auto reduce = [](std::int64_t v) {
      const auto m = static_cast<std::int64_t>(p);
      return static_cast<std::uint64_t>(((v % m) + m) % m);
    };
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 4; ++trial) {
      const std::uint64_t x = 2 + rng() % (p - 3);
      const std::uint64_t xD = powMod(x, static_cast<std::uint64_t>(D), p);
      std::uint64_t lhs = 0;
      bool pole = false;
      for (std::size_t j = 0; j < terms.size() && !pole; ++j) {
        std::uint64_t num = terms[j].curve ? (1 + xD) % p : 1, den = 1;
        for (const auto a : exps[j]) {
          const std::uint64_t xa = powMod(x, static_cast<std::uint64_t>(a), p);
          if (xa == 1) pole = true;
          num = mulMod(num, (xD + p - xa) % p, p);
          den = mulMod(den, (xa + p - 1) % p, p);
        }
        lhs = (lhs + mulMod(num, powMod(den, p - 2, p), p)) % p;
      }
      if (pole) {
        --trial;
        continue;
      }
      std::uint64_t rhs = 0;
      for (auto k = static_cast<std::int64_t>(top); k >= 0; --k) rhs = (mulMod(rhs, x, p) + reduce(sum[k])) % p;
      if (lhs != rhs) throw InternalError("stringy E-function group does not reduce to a polynomial");
    }
  }
  Puiseux out;
  for (std::int64_t k = 0; k <= top; ++k)
    if (sum[k] != 0) addTerm(out, Rational(k, D), Rational(sum[k]));
  return out;
}

}  // namespace detail

/// E_st,P(z) = Σ_J E(D_J, z) Π_{j∈J} (z - z^{ν_j}) / (z^{ν_j} - 1), J running
/// over subsets of rays with D_J nonempty. Terms are summed separately per
/// cone of the unrefined fan (each partial sum is a polynomial in z^{1/c}
/// with c the facet's denominator) and the partial results added.
inline SpectrumPoly stringyE2D(const SmoothResolution2D& res) {
  const int r = res.r;
  const auto& nu = res.fan.nu;
  Puiseux total;
  addTerm(total, Rational(0), Rational(1));
  addTerm(total, Rational(1), Rational(r - 2));
  addTerm(total, Rational(2), Rational(1));

  // Group key: index of the original ray starting the cone, or r + index for
  // the single-ray term of an original ray.
  std::vector<int> coneOf(r);
  int firstOriginal = -1;
  for (int i = 0; i < r; ++i)
    if (!res.inserted[i]) {
      firstOriginal = i;
      break;
    }
  if (firstOriginal < 0) throw InternalError("resolution has no original rays");
  int current = firstOriginal;
  for (int step = 0; step < r; ++step) {
    const int i = (firstOriginal + step) % r;
    if (!res.inserted[i]) current = i;
    coneOf[i] = current;
  }

  std::map<int, std::vector<detail::StringyTerm>> groups;
  const Rational one(1);
  for (int i = 0; i < r; ++i) {
    if (nu[i] != one) groups[res.inserted[i] ? coneOf[i] : r + i].push_back({true, {nu[i]}});
    const int j = (i + 1) % r;
    if (nu[i] != one && nu[j] != one) groups[coneOf[i]].push_back({false, {nu[i], nu[j]}});
  }
  for (const auto& [_, terms] : groups)
    for (const auto& [e, c] : detail::sumStringyTerms(terms)) addTerm(total, e, c);
  return SpectrumPoly::fromPuiseux(total);
}

struct HirzebruchModel {
  int m;
};

using GhvKind = std::variant<HirzebruchModel, WpsWeights>;

/// Newton polytope of the Givental-Hori-Vafa model: u1 + u2 + q1/u2 + q2 u2^m/u1
/// for Hirzebruch surfaces, the weighted projective polytope otherwise.
inline LatticePolytope ghvNewtonPolytope(const GhvKind& kind) {
  if (const auto* h = std::get_if<HirzebruchModel>(&kind)) {
    if (h->m < 1) throw ParameterError("Hirzebruch parameter must be at least 1");
    return buildPolytope({{1, 0}, {0, 1}, {0, -1}, {-1, h->m}});
  }
  return wpsPolytope(std::get<WpsWeights>(kind));
}

}  // namespace spectra

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/fan.hpp"
#include "spectra/polytope.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// Puiseux polynomial with rational coefficients: exponent -> coefficient.
using Puiseux = std::map<Rational, Rational>;

inline void addTerm(Puiseux& p, const Rational& exponent, const Rational& coeff) {
  if (coeff.isZero()) return;
  auto [it, inserted] = p.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) p.erase(it);
  }
}

/// A spectrum as a multiset of rational exponents: Σ mult · z^exponent.
class SpectrumPoly {
 public:
  SpectrumPoly() = default;

  /// Converts a Puiseux polynomial; every coefficient must be a positive
  /// integer.
  static SpectrumPoly fromPuiseux(const Puiseux& p) {
    SpectrumPoly s;
    for (const auto& [e, c] : p) {
      if (!c.isInteger() || c.sign() <= 0)
        throw InternalError("spectrum coefficient of z^" + e.str() + " is " + c.str());
      s.terms_[e] = toInt64(c);
    }
    return s;
  }

  void add(const Rational& exponent, std::int64_t multiplicity) {
    if (multiplicity <= 0) throw InternalError("non-positive spectrum multiplicity");
    terms_[exponent] += multiplicity;
  }

  const std::map<Rational, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t multiplicity(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [_, m] : terms_) t += m;
    return t;
  }
  Rational minExponent() const { return terms_.begin()->first; }
  Rational maxExponent() const { return terms_.rbegin()->first; }

  /// α ↦ n - α.
  SpectrumPoly reflected(int n) const {
    SpectrumPoly s;
    for (const auto& [e, m] : terms_) s.terms_[Rational(n) - e] = m;
    return s;
  }

  /// Exponents listed with multiplicity, ascending.
  std::vector<Rational> exponents() const {
    std::vector<Rational> out;
    for (const auto& [e, m] : terms_) out.insert(out.end(), static_cast<std::size_t>(m), e);
    return out;
  }

  /// "0 3/5 4/5 1^2 6/5 7/5 2"
  std::string str() const {
    std::string out;
    for (const auto& [e, m] : terms_) {
      if (!out.empty()) out += ' ';
      out += e.str();
      if (m != 1) out += "^" + std::to_string(m);
    }
    return out;
  }

  friend bool operator==(const SpectrumPoly&, const SpectrumPoly&) = default;

 private:
  std::map<Rational, std::int64_t> terms_;
};

inline SpectrumPoly spectrumFrom(std::initializer_list<std::pair<Rational, std::int64_t>> terms) {
  SpectrumPoly s;
  for (const auto& [e, m] : terms) s.add(e, m);
  return s;
}

/// Σ_σ Σ_{v ∈ box(σ)} h_σ(z) z^{ν(v)} over all cones of the face fan,
/// including the zero cone.
inline SpectrumPoly geometricSpectrum(const LatticePolytope& P) {
  const FaceFan fan = faceFan(P);
  SpectrumPoly s;
  for (const auto& level : fan.conesByDimension) {
    for (const auto& sigma : level) {
      const auto box = boxPoints(fan, sigma, BoxMode::Open);
      if (box.empty()) continue;
      const UniPoly h = hodgeDelignePoly(fan, sigma);
      for (const auto& bp : box)
        for (int k = 0; k <= h.degree(); ++k)
          if (!h.coeff(k).isZero()) s.add(bp.nu + Rational(k), toInt64(h.coeff(k)));
    }
  }
  return s;
}

/// (1-z)^{n+1} F⁰_P(z), with F⁰_P(z) = Σ_{m>=0} Σ_{v ∈ mP} z^{ν(v) - ⌈ν(v)⌉ + m}
/// summed for m <= cutoff. Terms above cutoff-1 are discarded; they are the
/// only ones affected by truncation.
inline SpectrumPoly twistedEhrhartSpectrum(const LatticePolytope& P, int cutoff) {
  const int n = P.dimension();
  if (cutoff < n + 2) throw ParameterError("twisted Ehrhart cutoff must be at least n+2");
  Puiseux series;
  for (const auto& lp : latticePointsWithNu(P, Rational(cutoff))) {
    const Rational shift = lp.nu - Rational(lp.nu.ceil());
    for (auto m = toInt64(lp.nu.ceil()); m <= cutoff; ++m) addTerm(series, shift + Rational(m), Rational(1));
  }
  std::vector<std::int64_t> binom(n + 2);
  binom[0] = 1;
  for (int k = 1; k <= n + 1; ++k) binom[k] = binom[k - 1] * (n + 2 - k) / k;
  Puiseux product;
  const Rational limit(cutoff - 1);
  for (const auto& [e, c] : series)
    for (int k = 0; k <= n + 1; ++k) {
      const Rational exp = e + Rational(k);
      if (exp <= limit) addTerm(product, exp, c * Rational(k % 2 == 0 ? binom[k] : -binom[k]));
    }
  return SpectrumPoly::fromPuiseux(product);
}

inline constexpr int kDefaultCutoffOffset = 2;

inline SpectrumPoly twistedEhrhartSpectrum(const LatticePolytope& P) {
  return twistedEhrhartSpectrum(P, P.dimension() + kDefaultCutoffOffset);
}

struct BoundaryCounts {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
};

inline BoundaryCounts countLatticePoints(const LatticePolytope& P) {
  BoundaryCounts c;
  for (const auto& lp : latticePointsWithNu(P, Rational(1))) (lp.nu < Rational(1) ? c.interior : c.boundary)++;
  return c;
}

/// Spectrum of a two-dimensional polytope from its lattice points:
/// (card(∂P∩N) - 2) z + Σ_{v interior} (z^{ν(v)} + z^{2-ν(v)}).
inline SpectrumPoly algebraicSpectrum2D(const LatticePolytope& P) {
  if (P.dimension() != 2) throw UnsupportedError("algebraic spectrum is implemented in dimension 2 only");
  SpectrumPoly s;
  std::int64_t interior = 0, boundary = 0;
  for (const auto& lp : latticePointsWithNu(P, Rational(1))) {
    if (lp.nu == Rational(1)) {
      ++boundary;
      continue;
    }
    ++interior;
    s.add(lp.nu, 1);
    s.add(Rational(2) - lp.nu, 1);
  }
  if (boundary > 2) s.add(Rational(1), boundary - 2);
  // Pick: 2·area = 2I + B - 2.
  if (Integer(static_cast<long>(2 * interior + boundary - 2)) != normalizedVolume(P))
    throw InternalError("Pick's formula disagrees with the normalized volume");
  return s;
}

/// Weights (1, λ_1, ..., λ_n) of a weighted projective space.
class WpsWeights {
 public:
  explicit WpsWeights(std::vector<std::int64_t> weights) : w_(std::move(weights)) {
    if (w_.size() < 2) throw ParameterError("weights need at least two entries");
    if (w_.front() != 1) throw ParameterError("the first weight must be 1");
    for (auto x : w_)
      if (x <= 0) throw ParameterError("weights must be positive");
  }
  const std::vector<std::int64_t>& values() const { return w_; }
  int dimension() const { return static_cast<int>(w_.size()) - 1; }
  std::int64_t mu() const { return std::accumulate(w_.begin(), w_.end(), std::int64_t{0}); }

 private:
  std::vector<std::int64_t> w_;
};

/// α_k = k - μ c_k, where c is the sorted sequence of fractions ℓ/λ_i each
/// repeated card{j : λ_j f ∈ Z} times.
inline SpectrumPoly wpsSpectrum(const WpsWeights& w) {
  const auto& lam = w.values();
  std::set<Rational> fractions;
  for (auto l : lam)
    for (std::int64_t k = 0; k < l; ++k) fractions.insert(Rational(k, l));
  std::vector<Rational> c;
  for (const auto& f : fractions) {
    std::int64_t d = 0;
    for (auto l : lam)
      if ((f * Rational(l)).isInteger()) ++d;
    c.insert(c.end(), static_cast<std::size_t>(d), f);
  }
  const std::int64_t mu = w.mu();
  if (static_cast<std::int64_t>(c.size()) != mu) throw InternalError("weighted sequence length differs from mu");
  SpectrumPoly s;
  for (std::int64_t k = 0; k < mu; ++k) s.add(Rational(k) - Rational(mu) * c[k], 1);
  return s;
}

/// conv{e_1, ..., e_n, -(λ_1, ..., λ_n)}.
inline LatticePolytope wpsPolytope(const WpsWeights& w) {
  const int n = w.dimension();
  std::vector<IntVector> verts;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    verts.push_back(std::move(e));
  }
  IntVector last;
  for (int i = 1; i <= n; ++i) last.push_back(-w.values()[i]);
  verts.push_back(std::move(last));
  return buildPolytope(verts);
}

struct SpectrumStats {
  std::int64_t mu = 0;
  Rational variance;          // Σ (α - n/2)^2
  Rational secondDerivAtOne;  // Σ α(α - 1)
  Rational minExp;
  Rational maxExp;
  Rational exponentSum;
};

inline SpectrumStats spectrumStats(const SpectrumPoly& s, int n) {
  if (s.empty()) throw ParameterError("spectrumStats: empty spectrum");
  SpectrumStats st;
  const Rational half(n, 2);
  for (const auto& [e, m] : s.terms()) {
    const Rational mult(m);
    st.mu += m;
    st.variance += mult * (e - half) * (e - half);
    st.secondDerivAtOne += mult * e * (e - Rational(1));
    st.exponentSum += mult * e;
  }
  st.minExp = s.minExponent();
  st.maxExp = s.maxExponent();
  return st;
}

/// Multiplicities are nondecreasing on exponents up to ⌊n/2⌋.
inline bool isUnimodalUpToMiddle(const SpectrumPoly& s, int n) {
  std::int64_t prev = 0;
  for (const auto& [e, m] : s.terms()) {
    if (e > Rational(n / 2)) break;
    if (m < prev) return false;
    prev = m;
  }
  return true;
}

}  // namespace spectra

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(const Rational& constant) {  // NOLINT(implicit)
    if (!constant.isZero()) c_.push_back(constant);
  }

  static UniPoly monomial(const Rational& coeff, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UniPoly monic() const {
    if (isZero()) return {};
    const Rational inv = leading().inverse();
    std::vector<Rational> c = c_;
    for (auto& x : c) x *= inv;
    return UniPoly(std::move(c));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) { return UniPoly() - a; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].isZero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.isZero()) throw DivisionByZeroError("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    const Rational invLead = b.leading().inverse();
    for (int k = a.degree() - db; k >= 0; --k) {
      const Rational f = r[k + db] * invLead;
      q[k] = f;
      if (f.isZero()) continue;
      for (int j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "t") const {
    if (isZero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& a = c_[k];
      if (a.isZero()) continue;
      if (!out.empty()) out += a.sign() > 0 ? " + " : " - ";
      else if (a.sign() < 0) out += "-";
      const Rational mag = a.abs();
      const bool unit = mag == Rational(1);
      if (k == 0 || !unit) out += mag.str();
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd over Q via the Euclidean algorithm; gcd(0, 0) = 0.
inline UniPoly polyGcd(UniPoly a, UniPoly b) {
  while (!b.isZero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Quotient num/den of two polynomials.
struct PolyFraction {
  UniPoly num;
  UniPoly den{Rational(1)};

  bool isPolynomial() const { return den.degree() == 0; }
};

/// Cancels the common factor and normalizes the denominator to be monic.
inline PolyFraction polyGcdReduce(const PolyFraction& f) {
  if (f.den.isZero()) throw DivisionByZeroError("polynomial fraction with zero denominator");
  if (f.num.isZero()) return {UniPoly(), UniPoly(Rational(1))};
  const UniPoly g = polyGcd(f.num, f.den);
  UniPoly num = divmod(f.num, g).first;
  UniPoly den = divmod(f.den, g).first;
  const Rational lead = den.leading();
  const Rational inv = lead.inverse();
  return {num * UniPoly(inv), den * UniPoly(inv)};
}

inline PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  return polyGcdReduce({a.num * b.den + b.num * a.den, a.den * b.den});
}

inline PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
  return polyGcdReduce({a.num * b.num, a.den * b.den});
}

}  // namespace spectra

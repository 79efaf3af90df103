#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "spectra/errors.hpp"

namespace spectra {

using Integer = mpz_class;

/// Exact rational number backed by GMP. Always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(const Integer& value) : value_(value) {}                    // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw ParameterError("not a rational number: '" + s + "'");
    }
  }

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  bool isInteger() const { return value_.get_den() == 1; }
  bool isZero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }
  Integer ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }

  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const {
    if (isZero()) throw DivisionByZeroError("inverse of zero");
    return Rational(mpq_class(1) / value_);
  }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (isInteger()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  double toDouble() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw DivisionByZeroError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

inline std::int64_t toInt64(const Integer& z) {
  if (!z.fits_slong_p()) throw SpectraError("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

inline std::int64_t toInt64(const Rational& r) {
  if (!r.isInteger()) throw SpectraError("not an integer: " + r.str());
  return toInt64(r.num());
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace spectra

template <>
struct std::hash<spectra::Rational> {
  std::size_t operator()(const spectra::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};

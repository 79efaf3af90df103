#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// Lattice vector in Z^n.
using IntVector = std::vector<std::int64_t>;
/// Vector over Q (elements of N_R or M_R).
using QVector = std::vector<Rational>;
/// Row-major matrix over Q.
using QMatrix = std::vector<QVector>;

inline QVector toQVector(std::span<const std::int64_t> v) { return QVector(v.begin(), v.end()); }

inline Rational dot(const QVector& a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * Rational(b[i]);
  return s;
}

inline Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t gcdOf(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

inline IntVector primitive(IntVector v) {
  auto g = gcdOf(v);
  if (g == 0) throw ParameterError("primitive: zero vector");
  for (auto& x : v) x /= g;
  return v;
}

namespace detail {
inline void requireSquare(const QMatrix& m, const char* op) {
  for (const auto& row : m)
    if (row.size() != m.size())
      throw DimensionError(std::string(op) + ": matrix is not square");
}
}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Rational matDet(QMatrix m) {
  detail::requireSquare(m, "matDet");
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational prevPivot(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].isZero()) ++swap;
      if (swap == n) return Rational(0);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prevPivot;
    }
    prevPivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

inline Rational matDet(const std::vector<IntVector>& rows) {
  QMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(toQVector(r));
  return matDet(std::move(m));
}

/// Solves m x = rhs exactly by Gauss-Jordan elimination.
inline QVector matSolve(QMatrix m, QVector rhs) {
  detail::requireSquare(m, "matSolve");
  const std::size_t n = m.size();
  if (rhs.size() != n) throw DimensionError("matSolve: rhs length mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].isZero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matSolve: singular matrix");
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    const Rational inv = m[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].isZero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

/// Rank of an arbitrary (possibly non-square) matrix.
inline std::size_t matRank(QMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].isZero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col].isZero()) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m[0].size(), QVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline QMatrix matMul(const QMatrix& a, const QMatrix& b) {
  const std::size_t inner = b.size();
  QMatrix out(a.size(), QVector(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DimensionError("matMul: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].isZero()) continue;
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline QMatrix matInverse(const QMatrix& m) {
  detail::requireSquare(m, "matInverse");
  const std::size_t n = m.size();
  QMatrix cols;
  for (std::size_t c = 0; c < n; ++c) {
    QVector e(n);
    e[c] = Rational(1);
    cols.push_back(matSolve(m, std::move(e)));
  }
  return transpose(cols);
}

}  // namespace spectra

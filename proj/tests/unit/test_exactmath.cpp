#include <gtest/gtest.h>

#include <random>

#include "spectra/spectra.hpp"
#include "support/oracles.hpp"

using namespace spectra;

TEST(Rational, NormalizesAndPrints) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational::parse("32/5"), Rational(64, 10));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational(1, 0), DivisionByZeroError);
  EXPECT_THROW(Rational(3) / Rational(0), DivisionByZeroError);
  EXPECT_THROW(Rational::parse("1/x"), SpectraError);
}

TEST(Rational, FloorCeilOrdering) {
  EXPECT_EQ(Rational(7, 3).floor(), 2);
  EXPECT_EQ(Rational(7, 3).ceil(), 3);
  EXPECT_EQ(Rational(-7, 3).floor(), -3);
  EXPECT_EQ(Rational(-7, 3).ceil(), -2);
  EXPECT_EQ(Rational(4).ceil(), 4);
  EXPECT_LT(Rational(2, 3), Rational(3, 4));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(MatDet, Examples) {
  EXPECT_EQ(matDet(QMatrix{{1, 0}, {0, 1}}), Rational(1));
  EXPECT_EQ(matDet(QMatrix{{1, 0}, {-1, -3}}), Rational(-3));
  EXPECT_EQ(matDet(QMatrix{{0, 1}, {-1, -3}}), Rational(1));
  EXPECT_THROW(matDet(QMatrix{{1, 2, 3}, {4, 5, 6}}), DimensionError);
}

TEST(MatDet, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9), den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    QMatrix m(n, QVector(n));
    for (auto& row : m)
      for (auto& x : row) x = Rational(entry(rng), den(rng));
    if (trial % 10 == 0) m[n - 1] = m[0];  // force some singular cases
    EXPECT_EQ(matDet(m), oracle::permutationDet(m));
  }
}

TEST(MatSolve, Examples) {
  EXPECT_EQ(matSolve(QMatrix{{1, 0}, {0, 1}}, QVector{Rational(2, 3), Rational(5)}),
            (QVector{Rational(2, 3), Rational(5)}));
  EXPECT_EQ(matSolve(QMatrix{{0, 1}, {-1, -3}}, QVector{1, 1}), (QVector{-4, 1}));
  EXPECT_EQ(matSolve(QMatrix{{1, 0}, {-1, -3}}, QVector{1, 1}), (QVector{1, Rational(-2, 3)}));
  EXPECT_THROW(matSolve(QMatrix{{1, 2}, {2, 4}}, QVector{1, 1}), SingularMatrixError);
}

TEST(MatSolve, ResidualIsZero) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    QMatrix m(n, QVector(n));
    QVector b(n);
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    for (auto& x : b) x = entry(rng);
    if (matDet(m).isZero()) {
      EXPECT_THROW(matSolve(m, b), SingularMatrixError);
      continue;
    }
    const QVector x = matSolve(m, b);
    for (int i = 0; i < n; ++i) EXPECT_EQ(dot(m[i], x), b[i]);
  }
}

TEST(MatRank, Basic) {
  EXPECT_EQ(matRank(QMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(matRank(QMatrix{{1, 0, 0}, {0, 1, 0}}), 2u);
  EXPECT_EQ(matRank(QMatrix{{0, 0}, {0, 0}}), 0u);
}

TEST(Primitive, DividesByGcd) {
  EXPECT_EQ(primitive({-2, -4}), (IntVector{-1, -2}));
  EXPECT_EQ(primitive({0, 6}), (IntVector{0, 1}));
  EXPECT_EQ(primitive({3, 5}), (IntVector{3, 5}));
}

namespace {
UniPoly poly(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return UniPoly(v);
}
}  // namespace

TEST(UniPoly, ArithmeticAndDivision) {
  const UniPoly a = poly({-1, 0, 1});  // t^2 - 1
  const UniPoly b = poly({-1, 1});
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, poly({1, 1}));
  EXPECT_TRUE(r.isZero());
  EXPECT_EQ(b * q, a);
  EXPECT_EQ(a(Rational(3)), Rational(8));
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_THROW(divmod(a, UniPoly()), DivisionByZeroError);
}

TEST(PolyGcdReduce, Examples) {
  auto f = polyGcdReduce({poly({-1, 0, 1}), poly({-1, 1})});
  EXPECT_TRUE(f.isPolynomial());
  EXPECT_EQ(f.num, poly({1, 1}));
  EXPECT_EQ(f.den, poly({1}));

  auto g = polyGcdReduce({poly({0, 0, -1, 1}), poly({-1, 0, 0, 1})});
  EXPECT_FALSE(g.isPolynomial());
  EXPECT_EQ(g.num, poly({0, 0, 1}));
  EXPECT_EQ(g.den, poly({1, 1, 1}));

  auto z = polyGcdReduce({UniPoly(), poly({1, 1})});
  EXPECT_TRUE(z.isPolynomial());
  EXPECT_TRUE(z.num.isZero());

  EXPECT_THROW(polyGcdReduce({poly({1}), UniPoly()}), DivisionByZeroError);
}

TEST(PolyGcdReduce, IdempotentAndValuePreserving) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 4);
  auto randomPoly = [&] {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return UniPoly(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly common = randomPoly();
    if (common.isZero()) continue;
    UniPoly num = randomPoly() * common;
    UniPoly den = randomPoly() * common;
    if (den.isZero()) continue;
    const PolyFraction once = polyGcdReduce({num, den});
    const PolyFraction twice = polyGcdReduce(once);
    EXPECT_EQ(once.num, twice.num);
    EXPECT_EQ(once.den, twice.den);
    EXPECT_EQ(once.den.leading(), Rational(1));
    EXPECT_EQ(num * once.den, den * once.num);
    EXPECT_EQ(polyGcd(once.num, once.den).degree(), 0);
  }
}

#include <gtest/gtest.h>

#include <map>

#include "spectra/spectra.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace spectra;

namespace {

std::vector<std::size_t> coneCounts(const FaceFan& fan) {
  std::vector<std::size_t> out;
  for (const auto& level : fan.conesByDimension) out.push_back(level.size());
  return out;
}

Cone coneThrough(const FaceFan& fan, const std::vector<IntVector>& gens) {
  for (const auto& c : fan.allCones()) {
    auto g = coneGenerators(fan, c);
    std::sort(g.begin(), g.end());
    auto want = gens;
    std::sort(want.begin(), want.end());
    if (g == want) return c;
  }
  ADD_FAILURE() << "cone not found";
  return {};
}

std::vector<corpus::Named> testPolytopes(std::uint64_t seed, int randomCount) {
  auto all = corpus::referenceCorpus();
  for (auto& e : corpus::higherDimensionalExtras()) all.push_back(e);
  for (const auto& P : corpus::randomPolygons(seed, randomCount, 6, false)) all.push_back({"random", P});
  return all;
}

}  // namespace

TEST(FaceFan, ConeCounts) {
  EXPECT_EQ(coneCounts(faceFan(corpus::p11a(3))), (std::vector<std::size_t>{1, 3, 3}));
  EXPECT_EQ(coneCounts(faceFan(corpus::square())), (std::vector<std::size_t>{1, 4, 4}));
  EXPECT_EQ(coneCounts(faceFan(corpus::p1222())), (std::vector<std::size_t>{1, 4, 6, 4}));
  EXPECT_EQ(coneCounts(faceFan(corpus::higherDimensionalExtras()[3].polytope)),
            (std::vector<std::size_t>{1, 5, 10, 10, 5}));
}

TEST(FaceFan, RejectsNonSimplicial) {
  std::vector<IntVector> cube;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) cube.push_back({a, b, c});
  EXPECT_THROW(faceFan(buildPolytope(cube)), UnsupportedError);
}

TEST(FaceFan, FacesClosedAndComplete) {
  for (const auto& [name, P] : testPolytopes(11, 30)) {
    const auto fan = faceFan(P);
    const int n = P.dimension();
    ASSERT_EQ(static_cast<int>(fan.conesByDimension.size()), n + 1) << name;
    EXPECT_EQ(fan.maximalCones().size(), facetPresentation(P).normals.size()) << name;
    EXPECT_TRUE(fan.conesByDimension[0].size() == 1 && fan.conesByDimension[0][0].generators.empty()) << name;
    std::set<Cone> all;
    for (const auto& c : fan.allCones()) all.insert(c);
    for (const auto& c : fan.allCones())
      for (std::size_t drop = 0; drop < c.generators.size(); ++drop) {
        Cone face = c;
        face.generators.erase(face.generators.begin() + drop);
        EXPECT_TRUE(all.count(face)) << name;
      }
    Integer dets = 0;
    for (const auto& sigma : fan.maximalCones()) dets += abs(matDet(coneGenerators(fan, sigma)).num());
    EXPECT_EQ(dets, normalizedVolume(P)) << name;
  }
}

TEST(BoxPoints, Examples) {
  const auto fan = faceFan(corpus::p11a(3));
  const auto open = boxPoints(fan, coneThrough(fan, {{1, 0}, {-1, -3}}), BoxMode::Open);
  std::map<IntVector, Rational> got;
  for (const auto& bp : open) got[bp.vector] = bp.nu;
  EXPECT_EQ(got, (std::map<IntVector, Rational>{{{0, -1}, Rational(2, 3)}, {{0, -2}, Rational(4, 3)}}));

  const auto uni = boxPoints(fan, coneThrough(fan, {{0, 1}, {-1, -3}}), BoxMode::HalfOpen);
  ASSERT_EQ(uni.size(), 1u);
  EXPECT_EQ(uni[0].vector, (IntVector{0, 0}));

  const auto fan122 = faceFan(corpus::p122());
  const auto ray = boxPoints(fan122, coneThrough(fan122, {{0, 2}}), BoxMode::Open);
  ASSERT_EQ(ray.size(), 1u);
  EXPECT_EQ(ray[0].vector, (IntVector{0, 1}));
  EXPECT_EQ(ray[0].nu, Rational(1, 2));
  EXPECT_EQ(corpus::p122().newtonValue(ray[0].vector), Rational(1, 2));

  for (auto mode : {BoxMode::Open, BoxMode::HalfOpen}) {
    const auto zero = boxPoints(fan, Cone{}, mode);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0].vector, (IntVector{0, 0}));
    EXPECT_EQ(zero[0].nu, Rational(0));
  }
}

TEST(BoxPoints, MatchBruteForceAndInvariants) {
  for (const auto& [name, P] : testPolytopes(12, 40)) {
    const auto fan = faceFan(P);
    const int n = P.dimension();
    Integer halfOpenTotal = 0;
    for (const auto& sigma : fan.allCones()) {
      const auto gens = coneGenerators(fan, sigma);
      for (auto mode : {BoxMode::Open, BoxMode::HalfOpen}) {
        const auto pts = boxPoints(fan, sigma, mode);
        std::map<IntVector, Rational> got;
        for (const auto& bp : pts) {
          got[bp.vector] = bp.nu;
          // vector = Σ q_i b_i, ν = Σ q_i and agrees with the Newton function
          IntVector check(n, 0);
          Rational qsum;
          for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& qi = bp.coefficients[i];
            EXPECT_GE(qi, Rational(0));
            EXPECT_LT(qi, Rational(1));
            if (mode == BoxMode::Open) {
              EXPECT_GT(qi, Rational(0));
            }
            qsum += qi;
          }
          for (int c = 0; c < n; ++c) {
            Rational s;
            for (std::size_t i = 0; i < gens.size(); ++i) s += bp.coefficients[i] * Rational(gens[i][c]);
            EXPECT_EQ(s, Rational(bp.vector[c]));
          }
          EXPECT_EQ(qsum, bp.nu);
          EXPECT_EQ(P.newtonValue(bp.vector), bp.nu) << name;
        }
        EXPECT_EQ(got, oracle::bruteBox(gens, n, mode == BoxMode::Open)) << name;
        if (mode == BoxMode::HalfOpen && sigma.dimension() == n) halfOpenTotal += static_cast<long>(pts.size());
        if (mode == BoxMode::Open && sigma.dimension() > 0) {
          // q ↦ 1 - q pairs open box points; ν values sum to dim σ
          for (const auto& bp : pts) {
            IntVector mirror(n, 0);
            for (std::size_t i = 0; i < gens.size(); ++i)
              for (int c = 0; c < n; ++c) mirror[c] += gens[i][c];
            for (int c = 0; c < n; ++c) mirror[c] -= bp.vector[c];
            ASSERT_TRUE(got.count(mirror)) << name;
            EXPECT_EQ(got[mirror] + bp.nu, Rational(sigma.dimension())) << name;
          }
        }
      }
    }
    EXPECT_EQ(halfOpenTotal, normalizedVolume(P)) << name;
  }
}

TEST(HodgeDeligne, Examples) {
  const auto fan = faceFan(corpus::projectivePlane());
  std::vector<Rational> c{1, 1, 1};
  EXPECT_EQ(hodgeDelignePoly(fan, Cone{}), UniPoly(c));
  for (const auto& ray : fan.conesByDimension[1])
    EXPECT_EQ(hodgeDelignePoly(fan, ray), UniPoly(std::vector<Rational>{1, 1}));
  for (const auto& sigma : fan.maximalCones()) EXPECT_EQ(hodgeDelignePoly(fan, sigma), UniPoly(Rational(1)));
}

TEST(HodgeDeligne, PalindromicAndEuler) {
  for (const auto& [name, P] : testPolytopes(13, 20)) {
    const auto fan = faceFan(P);
    const int n = P.dimension();
    for (const auto& sigma : fan.allCones()) {
      const auto h = hodgeDelignePoly(fan, sigma);
      const int top = n - sigma.dimension();
      EXPECT_EQ(h.degree(), top) << name;
      for (int k = 0; k <= top; ++k) {
        EXPECT_GE(h.coeff(k), Rational(0)) << name;
        EXPECT_EQ(h.coeff(k), h.coeff(top - k)) << name;
      }
    }
    EXPECT_EQ(hodgeDelignePoly(fan, Cone{})(Rational(1)), Rational(static_cast<long>(fan.maximalCones().size())))
        << name;
  }
}

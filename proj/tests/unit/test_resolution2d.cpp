#include <gtest/gtest.h>

#include <set>

#include "spectra/spectra.hpp"
#include "support/corpus.hpp"

using namespace spectra;

namespace {

std::map<IntVector, Rational> insertedRays(const SmoothResolution2D& res) {
  std::map<IntVector, Rational> out;
  for (int i = 0; i < res.r; ++i)
    if (res.inserted[i]) out[res.fan.rays[i]] = res.fan.nu[i];
  return out;
}

}  // namespace

TEST(BuildFan2D, Examples) {
  const auto f113 = buildFan2D(corpus::p11a(3));
  EXPECT_EQ(f113.rays, (std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -3}}));
  EXPECT_EQ(f113.nu, (std::vector<Rational>{1, 1, 1}));

  const auto f122 = buildFan2D(corpus::p122());
  EXPECT_EQ(f122.rays, (std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(f122.nu, (std::vector<Rational>{1, Rational(1, 2), Rational(1, 2)}));

  const auto f122b = buildFan2D(corpus::p1ll(2));
  EXPECT_EQ(f122b.rays, (std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(f122b.nu[2], Rational(1, 2));

  EXPECT_THROW(buildFan2D(corpus::p1222()), UnsupportedError);
}

TEST(ResolveFan2D, Examples) {
  const auto r113 = resolveFan2D(corpus::p11a(3));
  EXPECT_EQ(insertedRays(r113), (std::map<IntVector, Rational>{{{0, -1}, Rational(2, 3)}}));

  const auto r125 = resolveFan2D(corpus::p125());
  EXPECT_EQ(insertedRays(r125), (std::map<IntVector, Rational>{{{0, -1}, Rational(3, 5)},
                                                                {{-1, -3}, Rational(4, 5)},
                                                                {{-1, -2}, Rational(1)}}));
  EXPECT_EQ(r125.c1Squared, 6);

  const auto p2 = resolveFan2D(corpus::projectivePlane());
  EXPECT_TRUE(insertedRays(p2).empty());
  EXPECT_EQ(p2.selfIntersections, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(p2.c1Squared, 9);
}

TEST(ResolveFan2D, SmoothOnRandomPolygons) {
  for (auto policy : {InsertionPolicy::MinNu, InsertionPolicy::MaxNu})
    for (const auto& P : corpus::randomPolygons(31, 60, 6, false)) {
      const auto res = resolveFan2D(P, policy);
      std::int64_t sum = 0;
      for (int i = 0; i < res.r; ++i) {
        const auto& a = res.fan.rays[i];
        const auto& b = res.fan.rays[(i + 1) % res.r];
        EXPECT_EQ(a[0] * b[1] - a[1] * b[0], 1);
        EXPECT_EQ(gcdOf(a), 1);
        EXPECT_EQ(res.fan.nu[i], P.newtonValue(a));
        sum += res.selfIntersections[i];
      }
      // Noether on the smooth surface: c1^2 + e = 12 with e = r
      EXPECT_EQ(res.c1Squared, sum + 2 * res.r);
      EXPECT_EQ(res.c1Squared + res.r, 12);
    }
}

TEST(MuHat2D, Examples) {
  EXPECT_EQ(muHat2D(resolveFan2D(corpus::p11a(3))), Rational(25, 3));
  EXPECT_EQ(muHat2D(resolveFan2D(corpus::p125())), Rational(32, 5));
  EXPECT_EQ(muHat2D(resolveFan2D(corpus::p122())), Rational(10));
  const auto res = resolveFan2D(corpus::p125());
  EXPECT_EQ(muHat2DSumForm(res), muHat2DProductForm(res));
}

TEST(StringyE2D, Examples) {
  EXPECT_EQ(stringyE2D(resolveFan2D(corpus::p11a(3))), geometricSpectrum(corpus::p11a(3)));
  EXPECT_EQ(stringyE2D(resolveFan2D(corpus::p125())), geometricSpectrum(corpus::p125()));
  EXPECT_EQ(stringyE2D(resolveFan2D(corpus::projectivePlane())), spectrumFrom({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(stringyE2D(resolveFan2D(corpus::p1ll(3))), geometricSpectrum(corpus::p1ll(3)));
}

TEST(StringyE2D, GroupSumReducesToPolynomial) {
  // One exceptional ray with ν = 2/3 and its two neighbours at ν = 1.
  const auto p = detail::sumStringyTerms({{true, {Rational(2, 3)}}});
  Puiseux want;
  addTerm(want, Rational(2, 3), Rational(1));
  addTerm(want, Rational(4, 3), Rational(1));
  addTerm(want, Rational(1), Rational(-1));
  EXPECT_EQ(p, want);
  EXPECT_EQ(detail::sumStringyTerms({{true, {Rational(2, 3)}}}, 0), want);
}

TEST(StringyE2D, GroupSumRejectsNonPolynomial) {
  const std::vector<detail::StringyTerm> bad{{false, {Rational(2)}}};
  EXPECT_THROW(detail::sumStringyTerms(bad), InternalError);
  EXPECT_THROW(detail::sumStringyTerms(bad, 0), InternalError);
  EXPECT_THROW(detail::sumStringyTerms({{false, {Rational(0)}}}), InternalError);
}

TEST(StringyE2D, FineRefinementsAgree) {
  for (const auto& P : corpus::randomPolygons(977, 20, 6, true)) {
    const auto spec = geometricSpectrum(P);
    EXPECT_EQ(stringyE2D(resolveFan2D(P, InsertionPolicy::MaxNu)), spec);
  }
}

TEST(Ghv, Examples) {
  EXPECT_EQ(ghvNewtonPolytope(HirzebruchModel{3}).vertices(),
            buildPolytope({{1, 0}, {0, 1}, {0, -1}, {-1, 3}}).vertices());
  EXPECT_EQ(algebraicSpectrum2D(ghvNewtonPolytope(HirzebruchModel{1})), spectrumFrom({{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(ghvNewtonPolytope(WpsWeights({1, 1, 3})).vertices(), corpus::p11a(3).vertices());
  EXPECT_THROW(ghvNewtonPolytope(HirzebruchModel{0}), ParameterError);
}

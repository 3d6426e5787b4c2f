#include <random>

#include <gtest/gtest.h>

#include "k3cliff/lattice.hpp"

using namespace k3cliff;

namespace {

DivClass random_class(std::mt19937_64& rng, Int bound = 50) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  return {dist(rng), dist(rng)};
}

}  // namespace

TEST(Lattice, RejectsDegenerateOrNegativeM) {
  EXPECT_THROW(Lattice(0), std::invalid_argument);
  EXPECT_THROW(Lattice(-3), std::invalid_argument);
  EXPECT_NO_THROW(Lattice(1));
}

TEST(Lattice, IntersectionExamples) {
  EXPECT_EQ(Lattice(3).intersect(kE, kF), 3);
  EXPECT_EQ(Lattice(3).intersect(kE, kE), 0);
  EXPECT_EQ(Lattice(3).intersect(kF, kF), 0);
  EXPECT_EQ(Lattice(2).intersect({2, 3}, {2, 3}), 24);
}

TEST(Lattice, GenusExamples) {
  EXPECT_EQ(Lattice(2).genus({2, 3}), 13);
  EXPECT_EQ(Lattice(5).genus(kE), 1);
  EXPECT_EQ(Lattice(5).genus(kF), 1);
  EXPECT_EQ(Lattice(1).genus(kGamma), 0);
}

TEST(Lattice, GenusRejectsSquareBelowMinusTwo) {
  EXPECT_THROW(Lattice(1).genus({-1, 2}), std::domain_error);  // C^2 = -4
  EXPECT_THROW(Lattice(2).genus({-1, 1}), std::domain_error);  // C^2 = -4
}

TEST(Lattice, ChiExamples) {
  EXPECT_EQ(Lattice(2).chi(kE), 2);
  EXPECT_EQ(Lattice(2).chi({1, 1}), 4);
  EXPECT_EQ(Lattice(1).chi({-1, 2}), 0);
}

TEST(Lattice, EGammaCoordinates) {
  const Lattice lat(1);
  EXPECT_EQ(lat.to_e_gamma(kF), (EGammaCoords{1, 1}));
  EXPECT_EQ(lat.to_e_gamma({-1, 2}), (EGammaCoords{1, 2}));
  EXPECT_EQ(lat.to_e_gamma(kE), (EGammaCoords{1, 0}));
  EXPECT_THROW(Lattice(2).to_e_gamma(kF), std::domain_error);
  EXPECT_THROW(Lattice(2).from_e_gamma({1, 1}), std::domain_error);
}

TEST(Lattice, EGammaRoundTripsAndIsUnimodular) {
  const Lattice lat(1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const DivClass d = random_class(rng);
    EXPECT_EQ(lat.from_e_gamma(lat.to_e_gamma(d)), d);
  }
  const Int ee = lat.intersect(kE, kE), eg = lat.intersect(kE, kGamma), gg = lat.intersect(kGamma, kGamma);
  EXPECT_EQ(ee, 0);
  EXPECT_EQ(eg, 1);
  EXPECT_EQ(gg, -2);
  EXPECT_EQ(ee * gg - eg * eg, -1);
}

TEST(LatticeProperty, SymmetricBilinearEvenForm) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Int> coef(-9, 9), mdist(1, 12);
  for (int i = 0; i < 2000; ++i) {
    const Lattice lat(mdist(rng));
    const DivClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    const Int s = coef(rng), t = coef(rng);
    EXPECT_EQ(lat.intersect(a, b), lat.intersect(b, a));
    EXPECT_EQ(lat.intersect(s * a + t * b, c), s * lat.intersect(a, c) + t * lat.intersect(b, c));
    EXPECT_EQ(lat.square(a) % (2 * lat.m()), 0);
    EXPECT_EQ(lat.chi(a), 2 + lat.square(a) / 2);
    if (lat.square(a) >= -2) {
      EXPECT_EQ(2 * (lat.genus(a) - 1), lat.square(a));
    }
  }
}

TEST(Lattice, OverflowIsReportedNotWrapped) {
  const Lattice lat(1000);
  const DivClass big{Int{1} << 40, Int{1} << 40};
  EXPECT_THROW(lat.square(big), std::overflow_error);
  EXPECT_THROW(big + (DivClass{INT64_MAX, 0}), std::overflow_error);
}

#include <gtest/gtest.h>

#include <cmath>

#include "hopf4d/error.hpp"
#include "hopf4d/hopf.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hopf4d;

using testing_support::code_of;
using testing_support::expect_near;

constexpr double kTol = 1e-12;

TEST(HopfMap, PoleCases) {
  expect_near(hopf_map({1, 0, 0, 0}), {0, 0, 1});
  expect_near(hopf_map({0, 0, 1, 0}), {0, 0, -1});
}

TEST(HopfMap, EquatorPoint) {
  const double h = 1.0 / std::sqrt(2.0);
  expect_near(hopf_map({h, 0, h, 0}), {1, 0, 0});
}

TEST(HopfMap, MatchesComplexForm) {
  auto rng = oracle::rng(1);
  std::normal_distribution<double> g;
  for (int n = 0; n < 200; ++n) {
    Point4 p{g(rng), g(rng), g(rng), g(rng)};
    p = (1.0 / norm(p)) * p;
    expect_near(hopf_map(p), oracle::hopf(p));
  }
}

TEST(HopfMap, RejectsOffSphere) {
  EXPECT_EQ(code_of([] { hopf_map({2, 0, 0, 0}); }), Errc::NotOnSphere);
  EXPECT_EQ(code_of([] { hopf_map({0, 0, 0, 0}); }), Errc::NotOnSphere);
}

TEST(SphericalPoint, Examples) {
  expect_near(spherical_point({0, 0}), {0, 0, 1});
  expect_near(spherical_point({0, kPi}), {0, 0, -1});
  expect_near(spherical_point({0, kPi / 2}), {1, 0, 0});
}

TEST(AnglesFromBasePoint, Examples) {
  const auto north = angles_from_base_point({0, 0, 1});
  EXPECT_TRUE(north.pole_degenerate);
  EXPECT_EQ(north.angles.phi, 0.0);
  EXPECT_EQ(north.angles.psi, 0.0);

  const auto south = angles_from_base_point({0, 0, -1});
  EXPECT_TRUE(south.pole_degenerate);
  EXPECT_DOUBLE_EQ(south.angles.psi, kPi);

  const auto x = angles_from_base_point({1, 0, 0});
  EXPECT_FALSE(x.pole_degenerate);
  EXPECT_NEAR(x.angles.phi, 0.0, kTol);
  EXPECT_NEAR(x.angles.psi, kPi / 2, kTol);

  const auto y = angles_from_base_point({0, 1, 0});
  EXPECT_NEAR(y.angles.phi, kPi / 2, kTol);
  EXPECT_NEAR(y.angles.psi, kPi / 2, kTol);
}

TEST(AnglesFromBasePoint, RoundTripsAwayFromPoles) {
  auto rng = oracle::rng(2);
  std::uniform_real_distribution<double> phi(0.0, kTwoPi);
  std::uniform_real_distribution<double> psi(1e-3, kPi - 1e-3);
  for (int n = 0; n < 500; ++n) {
    const BaseAngles b{phi(rng), psi(rng)};
    const auto back = angles_from_base_point(spherical_point(b));
    EXPECT_FALSE(back.pole_degenerate);
    EXPECT_NEAR(back.angles.psi, b.psi, 1e-12);
    EXPECT_NEAR(std::remainder(back.angles.phi - b.phi, kTwoPi), 0.0, 1e-11);
  }
}

TEST(AnglesFromBasePoint, RejectsNonUnit) {
  EXPECT_EQ(code_of([] { angles_from_base_point({0, 0, 2}); }), Errc::NotOnSphere);
}

TEST(BaseAngles, Validation) {
  EXPECT_EQ(code_of([] { BaseAngles::make(0, -0.1); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { BaseAngles::make(0, 4.0); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { BaseAngles::make(NAN, 1.0); }), Errc::InvalidArgument);
  EXPECT_NEAR(BaseAngles::make(-kPi / 2, 1.0).phi, 1.5 * kPi, kTol);
  EXPECT_EQ(BaseAngles::make(kTwoPi, 1.0).phi, 0.0);
}

TEST(FiberPoint, Examples) {
  expect_near(fiber_point({{0, 0}, 0}), {1, 0, 0, 0});
  expect_near(fiber_point({{0, kPi}, 0}), {0, 0, 1, 0});
  const double h = std::sqrt(2.0) / 2.0;
  expect_near(fiber_point({{kPi / 2, kPi / 2}, 0}), {0, h, h, 0});
}

TEST(FiberPoint, MatchesComplexForm) {
  auto rng = oracle::rng(3);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  std::uniform_real_distribution<double> p(0.0, kPi);
  for (int n = 0; n < 500; ++n) {
    const double phi = a(rng);
    const double psi = p(rng);
    const double beta = a(rng);
    expect_near(fiber_point({{phi, psi}, beta}), oracle::fiber(phi, psi, beta));
  }
}

TEST(FiberPoint, UnitNormOnGrid) {
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j <= 16; ++j) {
      for (int k = 0; k < 32; ++k) {
        const FiberParams f{{kTwoPi * i / 32, kPi * j / 16}, kTwoPi * k / 32};
        ASSERT_NEAR(norm(fiber_point(f)), 1.0, 1e-12);
      }
    }
  }
}

TEST(FiberPoint, LiesOverItsBasePoint) {
  auto rng = oracle::rng(4);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  std::uniform_real_distribution<double> p(0.0, kPi);
  for (int n = 0; n < 300; ++n) {
    const BaseAngles b{a(rng), p(rng)};
    const Point3 q = spherical_point(b);
    for (int k = 0; k < 16; ++k) expect_near(hopf_map(fiber_point({b, a(rng)})), q);
  }
}

TEST(FiberCircle, Examples) {
  const Circle4 north = fiber_circle({0, 0});
  expect_near(north.center, {0, 0, 0, 0});
  expect_near(north.u, {1, 0, 0, 0});
  expect_near(north.v, {0, 1, 0, 0});
  EXPECT_EQ(north.radius, 1.0);

  const Circle4 south = fiber_circle({0, kPi});
  expect_near(south.u, {0, 0, 1, 0});
  expect_near(south.v, {0, 0, 0, 1});
}

TEST(FiberCircle, OrthonormalFrameReproducesFiber) {
  auto rng = oracle::rng(5);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  std::uniform_real_distribution<double> p(0.0, kPi);
  for (int n = 0; n < 200; ++n) {
    const BaseAngles b{a(rng), p(rng)};
    const Circle4 c = fiber_circle(b);
    EXPECT_NEAR(dot(c.u, c.v), 0.0, kTol);
    EXPECT_NEAR(norm(c.u), 1.0, kTol);
    EXPECT_NEAR(norm(c.v), 1.0, kTol);
    const double beta = a(rng);
    expect_near(c.at(beta), fiber_point({b, beta}));
  }
}

TEST(SampleFiber, FourSamplesAtNorthPole) {
  const Polyline4 line = sample_fiber({0, 0}, 4);
  ASSERT_EQ(line.size(), 4u);
  EXPECT_TRUE(line.closed);
  expect_near(line.vertices[0], {1, 0, 0, 0});
  expect_near(line.vertices[1], {0, 1, 0, 0});
  expect_near(line.vertices[2], {-1, 0, 0, 0});
  expect_near(line.vertices[3], {0, -1, 0, 0});
}

TEST(SampleFiber, SampleCountBounds) {
  EXPECT_EQ(sample_fiber({0, 1}, 3).size(), 3u);
  EXPECT_EQ(sample_fiber({0, 1}).size(), kDefaultFiberSamples);
  EXPECT_EQ(code_of([] { sample_fiber({0, 1}, 2); }), Errc::BadSampleCount);
}

TEST(AntipodalPoint, Examples) {
  expect_near(antipodal_point({{0, 0}, 0}), {-1, 0, 0, 0});
  expect_near(antipodal_point({{0, kPi}, 0}), {0, 0, -1, 0});
}

TEST(AntipodalPoint, IsNegationAndInvolution) {
  auto rng = oracle::rng(6);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  std::uniform_real_distribution<double> p(0.0, kPi);
  for (int n = 0; n < 200; ++n) {
    const FiberParams f{{a(rng), p(rng)}, a(rng)};
    expect_near(antipodal_point(f), -fiber_point(f));
    const FiberParams g{f.base, f.beta + kPi};
    expect_near(antipodal_point(g), fiber_point(f));
  }
}

TEST(ReduceAngle, Range) {
  EXPECT_EQ(reduce_angle(0.0), 0.0);
  EXPECT_EQ(reduce_angle(kTwoPi), 0.0);
  EXPECT_NEAR(reduce_angle(-0.5), kTwoPi - 0.5, kTol);
  EXPECT_NEAR(reduce_angle(7 * kPi), kPi, 1e-12);
  for (double t = -50.0; t < 50.0; t += 0.37) {
    const double r = reduce_angle(t);
    EXPECT_GE(r, 0.0);
    EXPECT_LT(r, kTwoPi);
  }
}

TEST(ComplexPair, RoundTrip) {
  const Point4 p{0.1, -0.2, 0.3, 0.9};
  EXPECT_EQ(ComplexPair::from_point(p).to_point(), p);
}

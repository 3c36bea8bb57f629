#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qmcshake/random.hpp"

using namespace qmcshake;

TEST(Uniform01, GoldenValue) {
  RandomStream r(20240601);
  EXPECT_EQ(r.uniform01(), 0.11554143888446278);
  RandomStream q(20240601);
  EXPECT_EQ(q.next_u64(), 2131363353009838922ull);
}

TEST(Uniform01, MatchesStandardEngine) {
  RandomStream r(99);
  std::mt19937_64 e(99);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(r.uniform01(), static_cast<double>(e() >> 11) * 0x1.0p-53);
  }
}

TEST(Uniform01, MeanAndVariance) {
  RandomStream r(1);
  const int n = 1000000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
    s2 += u * u;
  }
  const double mean = s / n;
  const double var = s2 / n - mean * mean;
  EXPECT_NEAR(mean, 0.5, 0.002);
  // Var of u^2 is 4/45; 4 sigma bound on the second moment.
  EXPECT_NEAR(var, 1.0 / 12.0, 4.0 * std::sqrt(4.0 / 45.0 / n) + 1e-4);
}

TEST(RandomStream, Reproducible) {
  RandomStream a(77), b(77), c(78);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform01();
    ASSERT_EQ(x, b.uniform01());
    differs |= x != c.uniform01();
  }
  EXPECT_TRUE(differs);
}

TEST(RandomStream, SplitIsDeterministicAndDistinct) {
  RandomStream root(5);
  auto a = root.split(0), b = root.split(0), c = root.split(1);
  EXPECT_EQ(a.seed(), derive_seed(5, 0));
  EXPECT_EQ(a.uniform01(), b.uniform01());
  EXPECT_NE(a.seed(), c.seed());
}

TEST(RandomStream, NormalMoments) {
  RandomStream r(3);
  const int n = 200000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = r.normal();
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
}

TEST(UniformInBox, UnitBoxSameLawAsUniform01) {
  RandomStream a(8), b(8);
  const std::vector<double> lo(3, 0.0), hi(3, 1.0);
  const auto p = uniform_in_box(a, lo, hi);
  for (double x : p) EXPECT_EQ(x, b.uniform01());
}

TEST(UniformInBox, RejectsDegenerateBox) {
  RandomStream r(1);
  const std::vector<double> lo{0.2, 0.3}, hi{0.2, 0.5}, inv{0.1, 0.5};
  EXPECT_THROW(uniform_in_box(r, lo, hi), std::invalid_argument);
  EXPECT_THROW(uniform_in_box(r, lo, inv), std::invalid_argument);
}

TEST(UniformInBox, QuarterBoxMean) {
  RandomStream r(2);
  const std::vector<double> lo{0.25, 0.25}, hi{0.5, 0.5};
  const int n = 100000;
  double s0 = 0.0, s1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto p = uniform_in_box(r, lo, hi);
    ASSERT_GE(p[0], 0.25);
    ASSERT_LT(p[0], 0.5);
    s0 += p[0];
    s1 += p[1];
  }
  EXPECT_NEAR(s0 / n, 0.375, 0.003);
  EXPECT_NEAR(s1 / n, 0.375, 0.003);
}

TEST(UniformOnSphere, ZeroSphereTwoPoints) {
  RandomStream r(4);
  const std::vector<double> c{0.5};
  int low = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto p = uniform_on_sphere(r, c, 0.1);
    ASSERT_TRUE(std::abs(p[0] - 0.4) < 1e-15 || std::abs(p[0] - 0.6) < 1e-15) << p[0];
    low += p[0] < 0.5;
  }
  // Binomial(1e4, 1/2): 4 sigma is 200.
  EXPECT_NEAR(low, n / 2, 200);
}

TEST(UniformOnSphere, RadiusExact) {
  RandomStream r(6);
  for (std::size_t d = 1; d <= 8; ++d) {
    const std::vector<double> c(d, 0.3);
    for (int i = 0; i < 200; ++i) {
      const auto p = uniform_on_sphere(r, c, 0.01);
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += (p[k] - c[k]) * (p[k] - c[k]);
      ASSERT_NEAR(std::sqrt(s), 0.01, 0.01 * 1e-12);
    }
  }
}

TEST(UniformOnSphere, IsotropicMean) {
  RandomStream r(7);
  const std::vector<double> c{0.5, 0.5, 0.5};
  const double rho = 0.2;
  const int n = 100000;
  std::vector<double> s(3, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto p = uniform_on_sphere(r, c, rho);
    for (int k = 0; k < 3; ++k) s[k] += p[k] - c[k];
  }
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(s[k] / n, 0.0, 4.0 * rho / std::sqrt(3.0 * n));
  }
}

TEST(UniformOnSphere, RejectsNonPositiveRadius) {
  RandomStream r(1);
  const std::vector<double> c{0.5, 0.5};
  EXPECT_THROW(uniform_on_sphere(r, c, 0.0), std::invalid_argument);
  EXPECT_THROW(uniform_on_sphere(r, c, -1.0), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "qmcshake/net.hpp"
#include "qmcshake/scramble.hpp"
#include "qmcshake/sobol.hpp"

using namespace qmcshake;

namespace {

std::vector<oracle::Point> to_points(const PointSet& ps) {
  std::vector<oracle::Point> pts;
  for (std::size_t i = 0; i < ps.size(); ++i) pts.emplace_back(ps[i].begin(), ps[i].end());
  return pts;
}

// Bit l (1-based, most significant first) of a 64-bit fraction.
int digit(std::uint64_t x, unsigned l) { return static_cast<int>((x >> (64 - l)) & 1u); }

}  // namespace

TEST(OwenScramble, IdentitySeedIsIdentity) {
  const auto ps = generate(3, 256);
  ScrambleSpec spec;
  spec.seed = ScrambleSpec::kIdentitySeed;
  const auto out = owen_scramble(ps, spec);
  EXPECT_EQ(out.provenance(), Provenance::Scrambled);
  for (std::size_t i = 0; i < ps.coords().size(); ++i) {
    EXPECT_EQ(out.coords()[i], ps.coords()[i]);
  }
}

TEST(OwenScramble, ZeroInputFollowsItsPrefixPath) {
  // For input 0, digit l of the output is exactly the flip applied at level l
  // along the all-zeros prefix; find a seed whose first flip is set.
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    ScrambleSpec spec;
    spec.seed = seed;
    const auto z = scramble_digits(0, 0, spec);
    if (digit(z, 1) == 1) {
      EXPECT_GE(scramble_coordinate(0.0, 0, spec), 0.5);
      return;
    }
  }
  FAIL() << "no seed flips the leading digit";
}

TEST(OwenScramble, SharedPrefixesShareFlips) {
  ScrambleSpec spec;
  spec.seed = 12345;
  spec.digits = 64;
  RandomStream rng(1);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::uint64_t a = rng.next_u64();
    const std::uint64_t b = rng.next_u64();
    const unsigned common = std::countl_zero(a ^ b);  // shared leading digits
    const auto za = scramble_digits(a, 1, spec), zb = scramble_digits(b, 1, spec);
    // Same prefix maps to the same prefix, and the first differing digit
    // stays different (a permutation of {0,1} is a bijection).
    if (common < 64) {
      ASSERT_EQ(std::countl_zero(za ^ zb), static_cast<int>(common));
    }
  }
}

TEST(OwenScramble, DigitsBeyondLimitUntouched) {
  ScrambleSpec spec;
  spec.seed = 9;
  spec.digits = 8;
  const std::uint64_t x = 0x0123456789ABCDEFull;
  const auto z = scramble_digits(x, 2, spec);
  EXPECT_EQ(z & ((std::uint64_t{1} << 56) - 1), x & ((std::uint64_t{1} << 56) - 1));
}

TEST(OwenScramble, Deterministic) {
  const auto ps = generate(2, 64);
  ScrambleSpec spec;
  spec.seed = 31;
  const auto a = owen_scramble(ps, spec), b = owen_scramble(ps, spec);
  for (std::size_t i = 0; i < a.coords().size(); ++i) EXPECT_EQ(a.coords()[i], b.coords()[i]);
}

TEST(OwenScramble, PreservesNetProperty) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (unsigned m : {4u, 7u, 10u}) {
      const auto ps = generate(d, std::size_t{1} << m);
      const unsigned t = net_quality(ps, m);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ScrambleSpec spec;
        spec.seed = seed;
        const auto out = owen_scramble(ps, spec);
        ASSERT_TRUE(check_net_property(out, t, m).passed)
            << "d=" << d << " m=" << m << " seed=" << seed;
      }
    }
  }
}

TEST(OwenScramble, NetOracleAgreesOnSmallCase) {
  const auto ps = generate(2, 32);
  ScrambleSpec spec;
  spec.seed = 4;
  EXPECT_TRUE(oracle::is_net(to_points(owen_scramble(ps, spec)), 0, 5));
}

TEST(OwenScramble, UniformMarginalAcrossSeeds) {
  // KS at the 1% level: critical value 1.628 / sqrt(n).
  const std::size_t n = 10000;
  for (double x : {0.0, 0.3, 0.8125}) {
    std::vector<double> sample;
    for (std::uint64_t seed = 0; seed < n; ++seed) {
      ScrambleSpec spec;
      spec.seed = seed;
      sample.push_back(scramble_coordinate(x, 0, spec));
    }
    EXPECT_LT(oracle::ks_uniform(sample), 1.628 / std::sqrt(static_cast<double>(n))) << x;
  }
}

TEST(OwenScramble, SpecValidation) {
  ScrambleSpec spec;
  spec.digits = 0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.digits = 65;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(OwenQmc, ConstantExactForEverySeed) {
  RunOptions o;
  o.replications = 5;
  const auto r = owen_qmc(constant(3, 4.0), 100, o);
  for (double e : r.estimates) EXPECT_EQ(e, 4.0);
}

TEST(OwenQmc, Accuracy) {
  RunOptions o;
  o.replications = 10;
  o.seed = 2;
  const auto r2 = owen_qmc(f2_smooth(), 10000, o);
  EXPECT_LE(*r2.relative_error, 3e-3);
  const auto r1 = owen_qmc(f1_nonsmooth(), 50000, o);
  EXPECT_LE(*r1.relative_error, 5e-4);
}

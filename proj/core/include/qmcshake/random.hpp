#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qmcshake {

/// Seedable uniform source backed by the 64-bit Mersenne Twister
/// (period 2^19937 - 1). Normal variates come from Box-Muller so that the
/// stream is bit-identical across standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0,1) with 53 random bits.
  double uniform01();
  std::uint64_t next_u64() { return engine_(); }
  /// Standard normal.
  double normal();

  /// Independent child stream for worker or replication `index`.
  RandomStream split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of child `index` derived from `root`: mix64(root ^ mix64(index)).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

/// Uniform point in the box prod [lower_i, upper_i). Throws
/// std::invalid_argument unless lower < upper componentwise.
void uniform_in_box(RandomStream& rng, std::span<const double> lower,
                    std::span<const double> upper, std::span<double> out);
std::vector<double> uniform_in_box(RandomStream& rng,
                                   std::span<const double> lower,
                                   std::span<const double> upper);

/// Uniformly distributed direction on the unit (d-1)-sphere, from a
/// normalized vector of independent standard normals.
void uniform_direction(RandomStream& rng, std::span<double> out);

/// Uniform point on the sphere of radius `rho` about `center`. Throws
/// std::invalid_argument if rho <= 0 or the dimension is 0.
void uniform_on_sphere(RandomStream& rng, std::span<const double> center,
                       double rho, std::span<double> out);
std::vector<double> uniform_on_sphere(RandomStream& rng,
                                      std::span<const double> center,
                                      double rho);

}  // namespace qmcshake

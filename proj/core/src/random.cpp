#include "qmcshake/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmcshake {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root ^ mix64(index));
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

RandomStream RandomStream::split(std::uint64_t index) const {
  return RandomStream(derive_seed(seed_, index));
}

void uniform_in_box(RandomStream& rng, std::span<const double> lower,
                    std::span<const double> upper, std::span<double> out) {
  if (lower.size() != upper.size() || out.size() != lower.size()) {
    throw std::invalid_argument("uniform_in_box: dimension mismatch");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("uniform_in_box: need lower < upper");
    }
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    double x = lower[i] + (upper[i] - lower[i]) * rng.uniform01();
    // Rounding can land exactly on the open upper end.
    if (x >= upper[i]) x = std::nextafter(upper[i], lower[i]);
    out[i] = x;
  }
}

std::vector<double> uniform_in_box(RandomStream& rng,
                                   std::span<const double> lower,
                                   std::span<const double> upper) {
  std::vector<double> out(lower.size());
  uniform_in_box(rng, lower, upper, out);
  return out;
}

void uniform_direction(RandomStream& rng, std::span<double> out) {
  if (out.empty()) throw std::invalid_argument("uniform_direction: dimension 0");
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& z : out) {
      z = rng.normal();
      norm2 += z * z;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& z : out) z *= inv;
}

void uniform_on_sphere(RandomStream& rng, std::span<const double> center,
                       double rho, std::span<double> out) {
  if (!(rho > 0.0)) throw std::invalid_argument("uniform_on_sphere: rho must be > 0");
  if (center.empty() || out.size() != center.size()) {
    throw std::invalid_argument("uniform_on_sphere: dimension mismatch");
  }
  uniform_direction(rng, out);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = center[i] + rho * out[i];
}

std::vector<double> uniform_on_sphere(RandomStream& rng,
                                      std::span<const double> center,
                                      double rho) {
  std::vector<double> out(center.size());
  uniform_on_sphere(rng, center, rho, out);
  return out;
}

}  // namespace qmcshake

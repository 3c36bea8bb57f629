#pragma once

#include <cstddef>
#include <cstdint>

#include "qmcshake/estimators.hpp"
#include "qmcshake/integrand.hpp"
#include "qmcshake/point_set.hpp"
#include "qmcshake/report.hpp"

namespace qmcshake {

/// Owen nested scrambling in base 2.
///
/// Digit l of coordinate j is XOR-ed with a bit drawn from a keyed hash of
/// (seed, j, l, digits 1..l-1 of the input coordinate). In base 2 every
/// permutation of {0,1} is either the identity or a flip, so this realizes
/// the full nested permutation tree without storing it: points that share a
/// digit prefix see the same permutation at the next digit.
struct ScrambleSpec {
  /// Seed under which every permutation is the identity; for debugging.
  static constexpr std::uint64_t kIdentitySeed = ~std::uint64_t{0};

  std::uint64_t seed = 0;
  unsigned digits = 32;  // leading digits scrambled, 1..64

  void validate() const;
};

/// Scrambles one coordinate given as a 64-bit binary fraction.
std::uint64_t scramble_digits(std::uint64_t x, std::size_t dim,
                              const ScrambleSpec& spec);
double scramble_coordinate(double x, std::size_t dim, const ScrambleSpec& spec);

/// Applies the scramble to every point; output provenance is `scrambled`.
PointSet owen_scramble(const PointSet& ps, const ScrambleSpec& spec);

/// Randomized QMC: equal-weight average over Owen-scrambled Sobol points.
/// Replication r uses scramble seed derive_seed(opts.seed, r) and `digits`.
EstimatorReport owen_qmc(const Integrand& f, std::size_t n,
                         const RunOptions& opts, unsigned digits = 32);

}  // namespace qmcshake

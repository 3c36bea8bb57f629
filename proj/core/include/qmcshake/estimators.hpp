#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmcshake/cell_grid.hpp"
#include "qmcshake/direction_table.hpp"
#include "qmcshake/integrand.hpp"
#include "qmcshake/point_set.hpp"
#include "qmcshake/random.hpp"
#include "qmcshake/report.hpp"

namespace qmcshake {

enum class BoundaryPolicy { Resample, RejectRun };

/// Shake radius and what to do when a shaken point leaves its cell.
/// Exactly one of `rho` and `kappa` must be set; with `kappa` the radius is
/// kappa * delta, delta being the minimal pairwise distance of the Sobol
/// points used by the run.
struct ShakeConfig {
  std::optional<double> rho;
  std::optional<double> kappa;
  BoundaryPolicy boundary = BoundaryPolicy::Resample;
  unsigned max_resamples = 100;  // redraws allowed after the first draw

  void validate() const;
};

/// A shaken point could not be kept inside its cell.
class ContainmentError : public std::runtime_error {
 public:
  ContainmentError(std::size_t point, std::uint64_t cell, unsigned attempts);
  std::size_t point() const { return point_; }
  std::uint64_t cell() const { return cell_; }

 private:
  std::size_t point_;
  std::uint64_t cell_;
};

struct ShakeStats {
  std::size_t resamples = 0;
  std::size_t fallback_cells = 0;
};

/// Draws a uniform point on the sphere of radius `rho` about `center` and
/// keeps it inside the half-open box [lo, hi). Along axes where the center
/// sits exactly on the lower face the direction component is folded to be
/// non-negative, which is the conditional sphere law on that half-space;
/// remaining exits are handled per `cfg.boundary`.
void shake_in_box(RandomStream& rng, std::span<const double> center,
                  double rho, std::span<const double> lo,
                  std::span<const double> hi, const ShakeConfig& cfg,
                  std::span<double> out, ShakeStats& stats,
                  std::size_t point_id, std::uint64_t cell_id);

/// Dyadic level L of the cells used by the sphere-shaking estimator: each
/// point is confined to the cube of side 2^-L containing it, with
/// L = floor(log2(n) / d), so there are at most n such cubes.
unsigned shake_cell_level(std::size_t n, std::size_t d);

struct ShakenSample {
  PointSet points;
  double rho = 0.0;
  std::optional<double> delta;
  ShakeStats stats;
};

/// Resolves the shake radius for `centers`: cfg.rho, or cfg.kappa * delta.
/// Returns {rho, delta}.
std::pair<double, std::optional<double>> resolve_rho(const ShakeConfig& cfg,
                                                     const PointSet& centers);

/// Sphere-shaken copies of `centers` (MCA-MSS-1). Each point stays in its
/// dyadic cell of level shake_cell_level(n, d). Throws std::invalid_argument
/// when rho is not below half the cell side, ContainmentError when a point
/// cannot be kept inside its cell.
ShakenSample shake_points(const PointSet& centers, double rho,
                          const ShakeConfig& cfg, RandomStream& rng);

/// Deterministic part of the symmetrized shaking estimator: the m^d grid, its
/// first m^d Sobol points, the resolved radius and the point owning each
/// cell (-1 for empty cells). Throws std::invalid_argument unless
/// 0 < rho < 1/(2m).
struct Mss2Plan {
  Mss2Plan(std::size_t d, std::size_t m, const ShakeConfig& cfg,
           const DirectionTable& table = DirectionTable::shipped());

  CellGrid grid;
  PointSet base;
  double rho = 0.0;
  std::optional<double> delta;
  std::vector<std::ptrdiff_t> owner;
  std::size_t empty_cells = 0;
};

ShakenSample symmetrized_shaken_points(const Mss2Plan& plan,
                                       const ShakeConfig& cfg,
                                       RandomStream& rng);

/// Symmetrized shaken pairs over the m^d grid (MCA-MSS-2). The first m^d
/// Sobol points are bucketed by cell; each cell uses its first point, shakes
/// it within the cell and appends the reflection through the cell center.
/// Empty cells fall back to a cell-uniform point and are counted.
ShakenSample symmetrized_shaken_points(std::size_t d, std::size_t m,
                                       const ShakeConfig& cfg,
                                       RandomStream& rng,
                                       const DirectionTable& table);

/// One cell-uniform point per cell plus its reflection (MCA-MSS-2-S).
PointSet stratified_symmetric_points(std::size_t d, std::size_t m,
                                     RandomStream& rng);

struct RunOptions {
  std::size_t replications = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool skip_zero = false;
  ShakeConfig shake;
  const DirectionTable* table = nullptr;  // shipped table when null

  const DirectionTable& direction_table() const {
    return table ? *table : DirectionTable::shipped();
  }
};

/// Mean of f over the points of `ps`; adds the number of calls to `evals`.
double average(const Integrand& f, const PointSet& ps, std::size_t& evals);

EstimatorReport plain_mc(const Integrand& f, std::size_t n,
                         const RunOptions& opts);
/// Deterministic; always a single replication.
EstimatorReport qmc_sobol(const Integrand& f, std::size_t n,
                          const RunOptions& opts);
EstimatorReport mca_mss_1(const Integrand& f, std::size_t n,
                          const RunOptions& opts);
EstimatorReport mca_mss_2(const Integrand& f, std::size_t m,
                          const RunOptions& opts);
EstimatorReport mca_mss_2s(const Integrand& f, std::size_t m,
                           const RunOptions& opts);

}  // namespace qmcshake

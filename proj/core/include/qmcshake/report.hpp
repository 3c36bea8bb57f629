#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmcshake {

/// Outcome of one estimator call, aggregated over its replications.
struct EstimatorReport {
  std::string method;
  std::size_t budget = 0;       // n, or m for the cell-based methods
  double estimate = 0.0;        // mean over replications
  std::vector<double> estimates;
  std::size_t n_evals = 0;      // evaluator calls per replication
  std::size_t total_evals = 0;  // evaluator calls across all replications
  std::size_t replications = 0;
  double rmse = 0.0;    // about the referent when known, else about the mean
  double stddev = 0.0;  // sample standard deviation of the replications
  double std_error = 0.0;
  std::optional<double> relative_error;       // |mean - S(f)| / |S(f)|
  std::optional<double> mean_relative_error;  // mean_r |est_r - S(f)| / |S(f)|
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> rho;
  std::optional<double> kappa;
  std::optional<double> delta;
  std::size_t resamples = 0;
  std::size_t fallback_cells = 0;
};

/// Fills the statistics of `report` from its per-replication estimates.
void summarize(EstimatorReport& report, std::optional<double> referent);

}  // namespace qmcshake

#pragma once

#include <optional>
#include <span>
#include <string>

#include "qmcshake/methods.hpp"
#include "qmcshake/net.hpp"
#include "qmcshake/report.hpp"
#include "qmcshake/sensitivity.hpp"

namespace qmcshake::cli {

/// Shortest round-trip text for a double.
std::string format_double(double v);

/// Rows use the columns method,n,rho,kappa,estimate,rel_err,rmse,time_s,seed.
/// n is the number of evaluator calls per replication. time_s is left empty
/// unless `timing` is set, which keeps output byte-stable across runs.
std::string rows_csv(std::span<const EstimatorReport> rows, bool timing);
std::string rows_json(std::span<const EstimatorReport> rows, bool timing);
std::string rows_table(std::span<const EstimatorReport> rows, bool timing);

/// Convergence rows with a trailing `slope,<value>` line (`slope,exact` when
/// every rmse is zero).
std::string convergence_csv(const ConvergenceReport& c, bool timing);
std::string convergence_json(const ConvergenceReport& c, bool timing);
std::string convergence_table(const ConvergenceReport& c, bool timing);

/// One line per quantity: kind,target,value,std_error,flag.
std::string sensitivity_csv(const SensitivityReport& r);
std::string sensitivity_json(const SensitivityReport& r);
std::string sensitivity_table(const SensitivityReport& r);

struct NetcheckRow {
  std::size_t dim = 0;
  unsigned m = 0;
  unsigned t = 0;
  bool passed = false;
  std::size_t intervals = 0;
  double min_distance = 0.0;
  std::optional<std::uint64_t> scramble_seed;
  std::string violation;
};

std::string netcheck_csv(const NetcheckRow& r);
std::string netcheck_json(const NetcheckRow& r);
std::string netcheck_table(const NetcheckRow& r);

}  // namespace qmcshake::cli

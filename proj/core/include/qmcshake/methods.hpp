#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmcshake/estimators.hpp"
#include "qmcshake/integrand.hpp"
#include "qmcshake/report.hpp"

namespace qmcshake {

enum class Method { PlainMc, QmcSobol, Mss1, Mss2, Mss2s, OwenQmc };

std::string_view method_id(Method m);
std::optional<Method> parse_method(std::string_view id);
std::span<const Method> all_methods();

/// Budget is the number of cells per axis m rather than a point count.
bool uses_cells(Method m);
bool uses_shake(Method m);
bool is_randomized(Method m);

/// Evaluator calls one replication of `m` makes for `budget` in dimension d.
std::size_t evaluations_for(Method m, std::size_t budget, std::size_t d);

struct MethodOptions : RunOptions {
  unsigned scramble_digits = 32;
};

EstimatorReport run_method(Method m, const Integrand& f, std::size_t budget,
                           const MethodOptions& opts);

struct ConvergenceRow {
  std::size_t budget = 0;
  std::size_t n_evals = 0;
  double mean_relative_error = 0.0;
  double rmse = 0.0;
  EstimatorReport report;
};

struct ConvergenceReport {
  Method method = Method::PlainMc;
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log(rmse) against log(n_evals); empty when the
  /// integrand is reproduced exactly at every budget.
  std::optional<double> slope;
  double intercept = 0.0;
  bool exact = false;
};

/// Ordinary least-squares slope and intercept of log(y) on log(x).
std::pair<double, double> fit_loglog(std::span<const double> x,
                                     std::span<const double> y);

/// Runs `m` at every budget (each with opts.seed and opts.replications) and
/// fits the error decay. Throws std::invalid_argument for fewer than three
/// strictly increasing budgets, a span under 1.5 decades of evaluations, or
/// fewer than five replications of a randomized method.
ConvergenceReport convergence_study(Method m, const Integrand& f,
                                    std::span<const std::size_t> budgets,
                                    const MethodOptions& opts);

}  // namespace qmcshake

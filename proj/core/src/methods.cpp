#include "qmcshake/methods.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qmcshake/scramble.hpp"

namespace qmcshake {

namespace {
constexpr std::array kMethods{Method::PlainMc, Method::QmcSobol, Method::Mss1,
                              Method::Mss2,    Method::Mss2s,    Method::OwenQmc};
}

std::string_view method_id(Method m) {
  switch (m) {
    case Method::PlainMc: return "plain-mc";
    case Method::QmcSobol: return "qmc-sobol";
    case Method::Mss1: return "mss1";
    case Method::Mss2: return "mss2";
    case Method::Mss2s: return "mss2s";
    case Method::OwenQmc: return "owen-qmc";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view id) {
  for (auto m : kMethods) {
    if (method_id(m) == id) return m;
  }
  return std::nullopt;
}

std::span<const Method> all_methods() { return kMethods; }

bool uses_cells(Method m) { return m == Method::Mss2 || m == Method::Mss2s; }
bool uses_shake(Method m) { return m == Method::Mss1 || m == Method::Mss2; }
bool is_randomized(Method m) { return m != Method::QmcSobol; }

std::size_t evaluations_for(Method m, std::size_t budget, std::size_t d) {
  if (!uses_cells(m)) return budget;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < d; ++i) cells *= budget;
  return 2 * cells;
}

EstimatorReport run_method(Method m, const Integrand& f, std::size_t budget,
                           const MethodOptions& opts) {
  switch (m) {
    case Method::PlainMc: return plain_mc(f, budget, opts);
    case Method::QmcSobol: return qmc_sobol(f, budget, opts);
    case Method::Mss1: return mca_mss_1(f, budget, opts);
    case Method::Mss2: return mca_mss_2(f, budget, opts);
    case Method::Mss2s: return mca_mss_2s(f, budget, opts);
    case Method::OwenQmc: return owen_qmc(f, budget, opts, opts.scramble_digits);
  }
  throw std::invalid_argument("run_method: unknown method");
}

std::pair<double, double> fit_loglog(std::span<const double> x,
                                     std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_loglog: need two or more paired values");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("fit_loglog: values must be positive");
    }
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_loglog: degenerate abscissae");
  const double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

ConvergenceReport convergence_study(Method m, const Integrand& f,
                                    std::span<const std::size_t> budgets,
                                    const MethodOptions& opts) {
  if (budgets.size() < 3) {
    throw std::invalid_argument("convergence_study: need at least 3 budgets");
  }
  for (std::size_t i = 1; i < budgets.size(); ++i) {
    if (budgets[i] <= budgets[i - 1]) {
      throw std::invalid_argument("convergence_study: budgets must be strictly increasing");
    }
  }
  const double span =
      std::log10(static_cast<double>(evaluations_for(m, budgets.back(), f.dimension))) -
      std::log10(static_cast<double>(evaluations_for(m, budgets.front(), f.dimension)));
  if (span < 1.5) {
    throw std::invalid_argument("convergence_study: budgets span " +
                                std::to_string(span) +
                                " decades of evaluations; need >= 1.5");
  }
  if (is_randomized(m) && opts.replications < 5) {
    throw std::invalid_argument("convergence_study: randomized methods need >= 5 replications");
  }

  ConvergenceReport out;
  out.method = m;
  std::vector<double> xs, ys;
  for (auto b : budgets) {
    ConvergenceRow row;
    row.budget = b;
    row.report = run_method(m, f, b, opts);
    row.n_evals = row.report.n_evals;
    row.rmse = row.report.rmse;
    row.mean_relative_error = row.report.mean_relative_error.value_or(0.0);
    if (row.rmse > 0.0) {
      xs.push_back(static_cast<double>(row.n_evals));
      ys.push_back(row.rmse);
    }
    out.rows.push_back(std::move(row));
  }
  out.exact = xs.empty();
  if (xs.size() >= 2) std::tie(out.slope, out.intercept) = fit_loglog(xs, ys);
  return out;
}

}  // namespace qmcshake

#include "qmcshake/report.hpp"

#include <cmath>
#include <stdexcept>

namespace qmcshake {

void summarize(EstimatorReport& report, std::optional<double> referent) {
  const auto& e = report.estimates;
  if (e.empty()) throw std::invalid_argument("summarize: no replications");
  const double r = static_cast<double>(e.size());
  report.replications = e.size();

  double mean = 0.0;
  for (double x : e) mean += x;
  mean /= r;
  report.estimate = mean;

  double ss = 0.0;
  for (double x : e) ss += (x - mean) * (x - mean);
  report.stddev = e.size() > 1 ? std::sqrt(ss / (r - 1.0)) : 0.0;
  report.std_error = report.stddev / std::sqrt(r);

  if (referent) {
    double se = 0.0, rel = 0.0;
    for (double x : e) {
      se += (x - *referent) * (x - *referent);
      rel += std::abs(x - *referent);
    }
    report.rmse = std::sqrt(se / r);
    const double scale = std::abs(*referent);
    if (scale > 0.0) {
      report.relative_error = std::abs(mean - *referent) / scale;
      report.mean_relative_error = rel / r / scale;
    } else {
      report.relative_error.reset();
      report.mean_relative_error.reset();
    }
  } else {
    report.rmse = std::sqrt(ss / r);
    report.relative_error.reset();
    report.mean_relative_error.reset();
  }
}

}  // namespace qmcshake

#include "qmcshake/integrand.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qmcshake {

Integrand f1_nonsmooth() {
  Integrand f;
  f.name = "f1-nonsmooth";
  f.dimension = 4;
  f.smoothness = Smoothness::NonSmooth;
  f.eval = [](std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const double r = std::max(std::abs(x[i] - 0.8), 1e-15);
      sum += 1.0 / std::cbrt(r);
    }
    return sum;
  };
  f.referent = kF1Referent;
  f.referent_note = "analytic 6(0.8^{2/3} + 0.2^{2/3}); published as 7.22261";
  return f;
}

Integrand f2_smooth() {
  Integrand f;
  f.name = "f2-smooth";
  f.dimension = 4;
  f.smoothness = Smoothness::Smooth;
  f.eval = [](std::span<const double> x) {
    return x[0] * x[1] * x[1] * std::exp(x[0] * x[1]) * std::sin(x[2]) *
           std::cos(x[3]);
  };
  f.referent = kF2Referent;
  f.referent_note = "high-precision quadrature; published as 0.10897";
  return f;
}

Integrand affine(std::span<const double> weights, double offset) {
  if (weights.empty()) throw std::invalid_argument("affine: dimension must be >= 1");
  Integrand f;
  f.name = "affine";
  f.dimension = weights.size();
  f.smoothness = Smoothness::Smooth;
  std::vector<double> w(weights.begin(), weights.end());
  f.referent = offset + 0.5 * std::accumulate(w.begin(), w.end(), 0.0);
  f.referent_note = "exact";
  f.eval = [w = std::move(w), offset](std::span<const double> x) {
    double sum = offset;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * x[i];
    return sum;
  };
  return f;
}

Integrand linear_sum(std::size_t d) {
  std::vector<double> ones(d, 1.0);
  auto f = affine(ones);
  f.name = "linear-d";
  return f;
}

Integrand constant(std::size_t d, double c) {
  if (d == 0) throw std::invalid_argument("constant: dimension must be >= 1");
  Integrand f;
  f.name = "constant";
  f.dimension = d;
  f.smoothness = Smoothness::Smooth;
  f.eval = [c](std::span<const double>) { return c; };
  f.referent = c;
  f.referent_note = "exact";
  return f;
}

Integrand product_x1x2() {
  Integrand f;
  f.name = "product-x1x2";
  f.dimension = 2;
  f.smoothness = Smoothness::Smooth;
  f.eval = [](std::span<const double> x) { return x[0] * x[1]; };
  f.referent = 0.25;
  f.referent_note = "exact";
  return f;
}

}  // namespace qmcshake

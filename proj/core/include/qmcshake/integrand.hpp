#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace qmcshake {

enum class Smoothness { W1, W2, Smooth, NonSmooth };

struct Integrand {
  std::string name;
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> eval;
  Smoothness smoothness = Smoothness::Smooth;
  std::optional<double> referent;
  std::string referent_note;

  double operator()(std::span<const double> x) const { return eval(x); }
};

/// Exact value of the integral of sum_i |x_i - 0.8|^{-1/3} over [0,1]^4,
/// 6 (0.8^{2/3} + 0.2^{2/3}).
inline constexpr double kF1Referent = 7.2226143920885573;
/// Exact value of the integral of x1 x2^2 e^{x1 x2} sin x3 cos x4 over
/// [0,1]^4, evaluated to 17 digits.
inline constexpr double kF2Referent = 0.10897486300873405;

/// f1(x) = sum_{i<4} |x_i - 0.8|^{-1/3}; |x_i - 0.8| is clamped below at
/// 1e-15 so the evaluator stays finite on the closed cube.
Integrand f1_nonsmooth();
/// f2(x) = x1 x2^2 exp(x1 x2) sin(x3) cos(x4).
Integrand f2_smooth();
/// Affine f(x) = offset + sum_i w_i x_i with exact referent.
Integrand affine(std::span<const double> weights, double offset = 0.0);
/// f(x) = x1 + ... + xd.
Integrand linear_sum(std::size_t d);
Integrand constant(std::size_t d, double c);
/// f(x1, x2) = x1 x2.
Integrand product_x1x2();

}  // namespace qmcshake

#pragma once

// Independent reference implementations used to check the library.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

using Point = std::vector<double>;

/// m_1..m_count from the recurrence written term by term:
/// m_k = XOR_{i=1..s} 2^i c_i m_{k-i}  XOR  m_{k-s}, with c_s = 1 and
/// c_i = a_i (interior coefficients, a_1 first) otherwise.
std::vector<std::uint64_t> m_sequence(const std::vector<int>& interior,
                                      const std::vector<std::uint64_t>& seeds,
                                      std::size_t count);

/// Coordinate of Sobol point `index` for one dimension, built digit by digit:
/// sum over set bits b_k of the (Gray-coded when `gray`) index of m_k 2^-k,
/// combined with XOR on K-bit fixed point.
double sobol_coordinate(const std::vector<std::uint64_t>& m, std::uint64_t index,
                        bool gray, unsigned bits = 32);

/// Exhaustive O(n^2) minimum Euclidean distance.
double min_distance(const std::vector<Point>& pts);

/// Explicit (t,m,s)-net test: enumerates every exponent vector with sum m-t
/// and every interval, scanning all points for each. Small cases only.
bool is_net(const std::vector<Point>& pts, unsigned t, unsigned m);

/// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre01(std::size_t n, std::vector<double>& nodes,
                      std::vector<double>& weights);

/// Variance decomposition of f on [0,1]^d by iterated tensor-grid quadrature.
struct Anova {
  double f0 = 0.0;
  double D = 0.0;
  /// D_y for the subset y (0-based input indices).
  std::function<double(const std::vector<std::size_t>&)> partial;
};

/// `nodes` per axis; exact for polynomials of degree < 2 * nodes per axis
/// (squares included).
Anova tensor_anova(const std::function<double(std::span<const double>)>& f,
                   std::size_t d, std::size_t nodes = 6);

/// Kolmogorov-Smirnov statistic of a sample against U[0,1).
double ks_uniform(std::vector<double> sample);

}  // namespace oracle

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmcshake/integrand.hpp"

namespace qmcshake {

struct Monomial {
  double coefficient = 0.0;
  std::vector<unsigned> exponents;  // one per input
};

/// Polynomial surrogate model, sum_k c_k prod_i x_i^{e_ki}.
///
/// Text format: first line `d degree`, then one line per monomial
/// `c e_1 ... e_d`. Blank lines and lines starting with '#' are skipped.
class PolynomialModel {
 public:
  PolynomialModel(std::size_t dimension, unsigned degree,
                  std::vector<Monomial> terms);

  static PolynomialModel parse(std::string_view text);
  static PolynomialModel load(const std::filesystem::path& path);
  std::string to_text() const;

  std::size_t dimension() const { return dim_; }
  unsigned degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  double operator()(std::span<const double> x) const;
  /// Exact integral over the unit cube.
  double mean() const;

  Integrand integrand(std::string name = "poly") const;

 private:
  std::size_t dim_;
  unsigned degree_;
  std::vector<Monomial> terms_;
};

}  // namespace qmcshake

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmcshake/estimators.hpp"
#include "qmcshake/integrand.hpp"
#include "qmcshake/point_set.hpp"

namespace qmcshake {

/// Point source for variance-based sensitivity estimates. Every sampler
/// produces points of dimension 2d: columns [0, d) are the base sample xi and
/// columns [d, 2d) the independent block used to resample complements.
enum class SamplerKind { PlainMc, QmcSobol, OwenQmc, Mss1 };

std::string_view sampler_id(SamplerKind k);
std::optional<SamplerKind> parse_sampler(std::string_view id);

struct SamplerSpec {
  SamplerKind kind = SamplerKind::QmcSobol;
  std::uint64_t seed = 0;
  unsigned scramble_digits = 32;
  ShakeConfig shake{.rho = std::nullopt, .kappa = 0.5};  // mss1 only
  bool skip_zero = false;
  const DirectionTable* table = nullptr;
};

/// n points of dimension `dim` from the sampler.
PointSet draw_points(std::size_t dim, std::size_t n, const SamplerSpec& spec);

/// Input subset y, as sorted 0-based indices; a non-empty proper subset of
/// {0, ..., d-1}.
class SubsetSpec {
 public:
  SubsetSpec(std::size_t d, std::vector<std::size_t> indices);
  static SubsetSpec single(std::size_t d, std::size_t i) { return {d, {i}}; }

  std::size_t dimension() const { return d_; }
  const std::vector<std::size_t>& indices() const { return y_; }
  SubsetSpec complement() const;
  bool contains(std::size_t i) const;
  /// 1-based, brace-delimited, e.g. "{1,3}".
  std::string label() const;

 private:
  std::size_t d_;
  std::vector<std::size_t> y_;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  bool clamped = false;  // a negative raw value was replaced by 0
};

/// Correlated-sampling estimators of f0, D and D_y sharing one base sample.
///
/// With xi = (eta, zeta) and an independent copy xi' = (eta', zeta'):
///   mean f(xi)               -> f0
///   mean f(xi)^2             -> D + f0^2
///   mean f(xi) f(eta, zeta') -> D_y + f0^2
/// The model is evaluated as g = f - c for a centering constant c, which
/// leaves every variance unchanged and reduces cancellation.
class SensitivityEstimator {
 public:
  SensitivityEstimator(const Integrand& f, std::size_t n,
                       const SamplerSpec& sampler, double centering = 0.0);

  std::size_t dimension() const { return d_; }
  std::size_t size() const { return n_; }
  double centering() const { return c_; }
  std::size_t evaluations() const { return evals_; }

  /// Mean of f (not of the centered model).
  Estimate f0() const;
  /// Total variance; clamped to 0 when negative.
  Estimate total_variance() const;
  /// True when D is zero or lost to rounding, leaving indices undefined.
  bool variance_degenerate() const;

  /// D_y from mean g(xi) g(eta, zeta') - f0_g^2, clamped at 0.
  Estimate partial_variance(const SubsetSpec& y);

  /// S_y = D_y / D; empty when D is degenerate.
  std::optional<Estimate> index(const SubsetSpec& y);
  std::optional<Estimate> first_order(std::size_t i);
  /// S_i^tot = 1 - D_{z_i} / D with z_i the complement of {i}; clamped at 0.
  std::optional<Estimate> total(std::size_t i);

 private:
  Integrand f_;
  std::size_t d_;
  std::size_t n_;
  double c_;
  PointSet sample_;
  std::vector<double> base_;  // g at the base points
  double mean_g_ = 0.0;
  double mean_g2_ = 0.0;
  double se_g_ = 0.0;
  double se_g2_ = 0.0;
  std::size_t evals_ = 0;
};

double estimate_f0(const Integrand& f, std::size_t n, const SamplerSpec& s);
Estimate estimate_total_variance(const Integrand& f, std::size_t n,
                                 const SamplerSpec& s);
Estimate estimate_partial_variance(const Integrand& f, const SubsetSpec& y,
                                   std::size_t n, const SamplerSpec& s);
std::optional<Estimate> first_order_index(const Integrand& f, std::size_t i,
                                          std::size_t n, const SamplerSpec& s);
std::optional<Estimate> total_index(const Integrand& f, std::size_t i,
                                    std::size_t n, const SamplerSpec& s);

struct CenteredModel {
  Integrand g;
  double c = 0.0;
};

/// g(x) = f(x) - c with c a pilot estimate of f0 from `n_pilot` points.
/// Random samplers draw the pilot from a stream derived from the seed.
CenteredModel center_model(const Integrand& f, std::size_t n_pilot,
                           const SamplerSpec& s);

struct SubsetRow {
  SubsetSpec subset;
  Estimate partial_variance;
  std::optional<Estimate> index;
};

struct InputRow {
  std::size_t input = 0;  // 0-based
  std::optional<Estimate> first_order;
  std::optional<Estimate> total;
};

struct SensitivityReport {
  double f0 = 0.0;
  Estimate D;
  bool D_degenerate = false;
  std::vector<SubsetRow> subsets;
  std::vector<InputRow> inputs;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string sampler;
  double centering = 0.0;
  bool centered = false;
  std::size_t evaluations = 0;
};

struct ReportOptions {
  bool first_order = true;
  bool total = true;
  bool centered = true;
  std::size_t n_pilot = 0;  // 0: use n
  std::vector<SubsetSpec> subsets;
};

SensitivityReport full_report(const Integrand& f, std::size_t n,
                              const SamplerSpec& s, const ReportOptions& opts);

}  // namespace qmcshake

#include "qmcshake/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmcshake/random.hpp"
#include "qmcshake/scramble.hpp"
#include "qmcshake/sobol.hpp"

namespace qmcshake {

namespace {

constexpr std::uint64_t kPilotStream = 0x70696c6f74;  // "pilot"

// Mean and standard error of the mean.
std::pair<double, double> mean_se(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  if (v.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

std::string_view sampler_id(SamplerKind k) {
  switch (k) {
    case SamplerKind::PlainMc: return "plain-mc";
    case SamplerKind::QmcSobol: return "qmc-sobol";
    case SamplerKind::OwenQmc: return "owen-qmc";
    case SamplerKind::Mss1: return "mss1";
  }
  return "unknown";
}

std::optional<SamplerKind> parse_sampler(std::string_view id) {
  for (auto k : {SamplerKind::PlainMc, SamplerKind::QmcSobol,
                 SamplerKind::OwenQmc, SamplerKind::Mss1}) {
    if (sampler_id(k) == id) return k;
  }
  return std::nullopt;
}

PointSet draw_points(std::size_t dim, std::size_t n, const SamplerSpec& spec) {
  const DirectionTable& table = spec.table ? *spec.table : DirectionTable::shipped();
  switch (spec.kind) {
    case SamplerKind::PlainMc: {
      RandomStream rng(spec.seed);
      std::vector<double> coords(dim * n);
      for (auto& x : coords) x = rng.uniform01();
      return PointSet(dim, std::move(coords), Provenance::Uniform);
    }
    case SamplerKind::QmcSobol:
      return generate(dim, n, spec.skip_zero, table);
    case SamplerKind::OwenQmc:
      return owen_scramble(generate(dim, n, spec.skip_zero, table),
                           ScrambleSpec{spec.seed, spec.scramble_digits});
    case SamplerKind::Mss1: {
      const PointSet centers = generate(dim, n, spec.skip_zero, table);
      const double rho = resolve_rho(spec.shake, centers).first;
      RandomStream rng(spec.seed);
      return shake_points(centers, rho, spec.shake, rng).points;
    }
  }
  throw std::invalid_argument("draw_points: unknown sampler");
}

SubsetSpec::SubsetSpec(std::size_t d, std::vector<std::size_t> indices)
    : d_(d), y_(std::move(indices)) {
  std::sort(y_.begin(), y_.end());
  if (y_.empty()) throw std::invalid_argument("SubsetSpec: subset is empty");
  if (std::adjacent_find(y_.begin(), y_.end()) != y_.end()) {
    throw std::invalid_argument("SubsetSpec: repeated index");
  }
  if (y_.back() >= d_) throw std::invalid_argument("SubsetSpec: index out of range");
  if (y_.size() >= d_) {
    throw std::invalid_argument("SubsetSpec: subset must be a proper subset");
  }
}

SubsetSpec SubsetSpec::complement() const {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < d_; ++i) {
    if (!contains(i)) z.push_back(i);
  }
  return SubsetSpec(d_, std::move(z));
}

bool SubsetSpec::contains(std::size_t i) const {
  return std::binary_search(y_.begin(), y_.end(), i);
}

std::string SubsetSpec::label() const {
  std::string out = "{";
  for (std::size_t k = 0; k < y_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(y_[k] + 1);
  }
  return out + "}";
}

SensitivityEstimator::SensitivityEstimator(const Integrand& f, std::size_t n,
                                           const SamplerSpec& sampler,
                                           double centering)
    : f_(f), d_(f.dimension), n_(n), c_(centering),
      sample_(draw_points(2 * f.dimension, n, sampler)) {
  if (n_ == 0) throw std::invalid_argument("SensitivityEstimator: n must be >= 1");
  base_.resize(n_);
  std::vector<double> sq(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    base_[j] = f_(sample_[j].first(d_)) - c_;
    sq[j] = base_[j] * base_[j];
  }
  evals_ = n_;
  std::tie(mean_g_, se_g_) = mean_se(base_);
  std::tie(mean_g2_, se_g2_) = mean_se(sq);
}

Estimate SensitivityEstimator::f0() const { return {mean_g_ + c_, se_g_, false}; }

Estimate SensitivityEstimator::total_variance() const {
  const double raw = mean_g2_ - mean_g_ * mean_g_;
  if (raw < 0.0) return {0.0, se_g2_, true};
  return {raw, se_g2_, false};
}

bool SensitivityEstimator::variance_degenerate() const {
  const double D = mean_g2_ - mean_g_ * mean_g_;
  return !(D > 1e-12 * mean_g2_) || mean_g2_ == 0.0;
}

Estimate SensitivityEstimator::partial_variance(const SubsetSpec& y) {
  if (y.dimension() != d_) {
    throw std::invalid_argument("partial_variance: subset dimension mismatch");
  }
  std::vector<double> x(d_), prod(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const auto p = sample_[j];
    // Keep the y coordinates of xi, take the rest from the independent block.
    for (std::size_t i = 0; i < d_; ++i) x[i] = y.contains(i) ? p[i] : p[d_ + i];
    prod[j] = base_[j] * (f_(x) - c_);
  }
  evals_ += n_;
  const auto [mean, se] = mean_se(prod);
  const double raw = mean - mean_g_ * mean_g_;
  if (raw < 0.0) return {0.0, se, true};
  return {raw, se, false};
}

std::optional<Estimate> SensitivityEstimator::index(const SubsetSpec& y) {
  const auto Dy = partial_variance(y);
  if (variance_degenerate()) return std::nullopt;
  const double D = total_variance().value;
  return Estimate{Dy.value / D, Dy.std_error / D, Dy.clamped};
}

std::optional<Estimate> SensitivityEstimator::first_order(std::size_t i) {
  return index(SubsetSpec::single(d_, i));
}

std::optional<Estimate> SensitivityEstimator::total(std::size_t i) {
  const auto Dz = partial_variance(SubsetSpec::single(d_, i).complement());
  if (variance_degenerate()) return std::nullopt;
  const double D = total_variance().value;
  const double raw = 1.0 - Dz.value / D;
  if (raw < 0.0) return Estimate{0.0, Dz.std_error / D, true};
  return Estimate{raw, Dz.std_error / D, Dz.clamped};
}

double estimate_f0(const Integrand& f, std::size_t n, const SamplerSpec& s) {
  const PointSet pts = draw_points(f.dimension, n, s);
  std::size_t evals = 0;
  return average(f, pts, evals);
}

Estimate estimate_total_variance(const Integrand& f, std::size_t n,
                                 const SamplerSpec& s) {
  return SensitivityEstimator(f, n, s).total_variance();
}

Estimate estimate_partial_variance(const Integrand& f, const SubsetSpec& y,
                                   std::size_t n, const SamplerSpec& s) {
  SensitivityEstimator est(f, n, s);
  return est.partial_variance(y);
}

std::optional<Estimate> first_order_index(const Integrand& f, std::size_t i,
                                          std::size_t n, const SamplerSpec& s) {
  SensitivityEstimator est(f, n, s);
  return est.first_order(i);
}

std::optional<Estimate> total_index(const Integrand& f, std::size_t i,
                                    std::size_t n, const SamplerSpec& s) {
  SensitivityEstimator est(f, n, s);
  return est.total(i);
}

CenteredModel center_model(const Integrand& f, std::size_t n_pilot,
                           const SamplerSpec& s) {
  if (n_pilot == 0) throw std::invalid_argument("center_model: n_pilot must be >= 1");
  SamplerSpec pilot = s;
  pilot.seed = derive_seed(s.seed, kPilotStream);
  CenteredModel out;
  out.c = estimate_f0(f, n_pilot, pilot);
  out.g = f;
  out.g.name = f.name + "-centered";
  out.g.eval = [eval = f.eval, c = out.c](std::span<const double> x) {
    return eval(x) - c;
  };
  if (f.referent) out.g.referent = *f.referent - out.c;
  return out;
}

SensitivityReport full_report(const Integrand& f, std::size_t n,
                              const SamplerSpec& s, const ReportOptions& opts) {
  if (f.dimension < 2 && (opts.first_order || opts.total || !opts.subsets.empty())) {
    throw std::invalid_argument("full_report: indices need at least 2 inputs");
  }
  SensitivityReport report;
  report.n = n;
  report.seed = s.seed;
  report.sampler = std::string(sampler_id(s.kind));
  report.centered = opts.centered;
  std::size_t pilot_evals = 0;
  if (opts.centered) {
    const std::size_t n_pilot = opts.n_pilot ? opts.n_pilot : n;
    report.centering = center_model(f, n_pilot, s).c;
    pilot_evals = n_pilot;
  }

  SensitivityEstimator est(f, n, s, report.centering);
  report.f0 = est.f0().value;
  report.D = est.total_variance();
  report.D_degenerate = est.variance_degenerate();

  for (const auto& y : opts.subsets) {
    SubsetRow row{y, est.partial_variance(y), std::nullopt};
    if (!report.D_degenerate) {
      const double D = report.D.value;
      row.index = Estimate{row.partial_variance.value / D,
                           row.partial_variance.std_error / D,
                           row.partial_variance.clamped};
    }
    report.subsets.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < f.dimension && (opts.first_order || opts.total); ++i) {
    InputRow row;
    row.input = i;
    if (opts.first_order) row.first_order = est.first_order(i);
    if (opts.total) row.total = est.total(i);
    report.inputs.push_back(row);
  }
  report.evaluations = est.evaluations() + pilot_evals;
  return report;
}

}  // namespace qmcshake

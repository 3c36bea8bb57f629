#include "qmcshake/estimators.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <string>
#include <tuple>

#include "parallel.hpp"
#include "qmcshake/cell_grid.hpp"
#include "qmcshake/net.hpp"
#include "qmcshake/sobol.hpp"

namespace qmcshake {

void ShakeConfig::validate() const {
  if (rho.has_value() == kappa.has_value()) {
    throw std::invalid_argument("ShakeConfig: set exactly one of rho and kappa");
  }
  if (rho && !(*rho > 0.0)) throw std::invalid_argument("ShakeConfig: rho must be > 0");
  if (kappa && !(*kappa > 0.0)) throw std::invalid_argument("ShakeConfig: kappa must be > 0");
  if (max_resamples < 1) throw std::invalid_argument("ShakeConfig: max_resamples must be >= 1");
}

ContainmentError::ContainmentError(std::size_t point, std::uint64_t cell,
                                   unsigned attempts)
    : std::runtime_error("shaken point " + std::to_string(point) +
                         " left cell " + std::to_string(cell) + " after " +
                         std::to_string(attempts) + " draws"),
      point_(point),
      cell_(cell) {}

void shake_in_box(RandomStream& rng, std::span<const double> center,
                  double rho, std::span<const double> lo,
                  std::span<const double> hi, const ShakeConfig& cfg,
                  std::span<double> out, ShakeStats& stats,
                  std::size_t point_id, std::uint64_t cell_id) {
  const std::size_t d = center.size();
  const unsigned max_draws = cfg.boundary == BoundaryPolicy::RejectRun
                                 ? 1u
                                 : cfg.max_resamples + 1u;
  for (unsigned draw = 0; draw < max_draws; ++draw) {
    uniform_direction(rng, out);
    bool inside = true;
    for (std::size_t i = 0; i < d; ++i) {
      double w = out[i];
      if (center[i] == lo[i]) w = std::abs(w);
      const double x = center[i] + rho * w;
      out[i] = x;
      inside = inside && x >= lo[i] && x < hi[i];
    }
    if (inside) {
      stats.resamples += draw;
      return;
    }
  }
  throw ContainmentError(point_id, cell_id, max_draws);
}

unsigned shake_cell_level(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) return 0;
  const unsigned log2n = static_cast<unsigned>(std::bit_width(n) - 1);
  return static_cast<unsigned>(log2n / d);
}

std::pair<double, std::optional<double>> resolve_rho(const ShakeConfig& cfg,
                                                     const PointSet& centers) {
  cfg.validate();
  if (cfg.rho) return {*cfg.rho, std::nullopt};
  const double delta = min_pairwise_distance(centers);
  if (!(delta > 0.0)) {
    throw std::invalid_argument("resolve_rho: coincident points give delta = 0");
  }
  return {*cfg.kappa * delta, delta};
}

ShakenSample shake_points(const PointSet& centers, double rho,
                          const ShakeConfig& cfg, RandomStream& rng) {
  const std::size_t d = centers.dimension();
  const std::size_t n = centers.size();
  const unsigned level = shake_cell_level(n, d);
  const double side = std::ldexp(1.0, -static_cast<int>(level));
  if (!(rho > 0.0) || !(rho < 0.5 * side)) {
    throw std::invalid_argument("shake_points: rho " + std::to_string(rho) +
                                " must lie in (0, " + std::to_string(0.5 * side) +
                                ") for cells of side " + std::to_string(side));
  }

  ShakenSample sample{PointSet(d, Provenance::Shaken), rho, std::nullopt, {}};
  sample.points.reserve(n);
  std::vector<double> lo(d), hi(d), out(d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = centers[i];
    std::uint64_t cell = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const double a = std::floor(std::ldexp(c[j], static_cast<int>(level)));
      lo[j] = a * side;
      hi[j] = (a + 1.0) * side;
      cell = (cell << level) | static_cast<std::uint64_t>(a);
    }
    shake_in_box(rng, c, rho, lo, hi, cfg, out, sample.stats, i, cell);
    sample.points.push_back(out);
  }
  return sample;
}

namespace {

// Pushes p and its reflection through `s`, both kept in [lo, hi).
void push_pair(PointSet& ps, std::span<const double> p,
               std::span<const double> s, std::span<const double> lo,
               std::span<const double> hi, std::vector<double>& scratch) {
  ps.push_back(p);
  reflect(p, s, scratch);
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    // Rounding (or a point on the lower face) can put the mirror image on
    // the excluded upper face.
    if (scratch[i] >= hi[i]) scratch[i] = std::nextafter(hi[i], lo[i]);
    if (scratch[i] < lo[i]) scratch[i] = lo[i];
  }
  ps.push_back(scratch);
}

std::vector<std::ptrdiff_t> first_point_per_cell(const CellGrid& grid,
                                                 const PointSet& pts) {
  std::vector<std::ptrdiff_t> owner(grid.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto cell = grid.cell_of(pts[i]);
    if (owner[cell] < 0) owner[cell] = static_cast<std::ptrdiff_t>(i);
  }
  return owner;
}

}  // namespace

Mss2Plan::Mss2Plan(std::size_t d, std::size_t m, const ShakeConfig& cfg,
                   const DirectionTable& table)
    : grid(d, m), base(generate(d, grid.size(), false, table)) {
  std::tie(rho, delta) = resolve_rho(cfg, base);
  if (!(rho < 0.5 / static_cast<double>(m))) {
    throw std::invalid_argument("mca_mss_2: rho " + std::to_string(rho) +
                                " must be below 1/(2m) = " +
                                std::to_string(0.5 / static_cast<double>(m)));
  }
  owner = first_point_per_cell(grid, base);
  for (auto o : owner) empty_cells += o < 0 ? 1 : 0;
}

ShakenSample symmetrized_shaken_points(const Mss2Plan& plan,
                                       const ShakeConfig& cfg,
                                       RandomStream& rng) {
  const auto& grid = plan.grid;
  const std::size_t d = grid.dimension();
  ShakenSample sample{PointSet(d, Provenance::SymmetrizedPairs), plan.rho,
                      plan.delta, {}};
  sample.points.reserve(2 * grid.size());
  std::vector<double> lo(d), hi(d), s(d), xi(d), scratch(d);
  for (std::size_t cell = 0; cell < grid.size(); ++cell) {
    grid.bounds(cell, lo, hi);
    grid.center(cell, s);
    if (plan.owner[cell] >= 0) {
      const auto i = static_cast<std::size_t>(plan.owner[cell]);
      shake_in_box(rng, plan.base[i], plan.rho, lo, hi, cfg, xi, sample.stats,
                   i, cell);
    } else {
      uniform_in_box(rng, lo, hi, xi);
      ++sample.stats.fallback_cells;
    }
    push_pair(sample.points, xi, s, lo, hi, scratch);
  }
  return sample;
}

ShakenSample symmetrized_shaken_points(std::size_t d, std::size_t m,
                                       const ShakeConfig& cfg,
                                       RandomStream& rng,
                                       const DirectionTable& table) {
  return symmetrized_shaken_points(Mss2Plan(d, m, cfg, table), cfg, rng);
}

PointSet stratified_symmetric_points(std::size_t d, std::size_t m,
                                     RandomStream& rng) {
  const CellGrid grid(d, m);
  PointSet ps(d, Provenance::SymmetrizedPairs);
  ps.reserve(2 * grid.size());
  std::vector<double> lo(d), hi(d), s(d), xi(d), scratch(d);
  for (std::size_t cell = 0; cell < grid.size(); ++cell) {
    grid.bounds(cell, lo, hi);
    grid.center(cell, s);
    uniform_in_box(rng, lo, hi, xi);
    push_pair(ps, xi, s, lo, hi, scratch);
  }
  return ps;
}

double average(const Integrand& f, const PointSet& ps, std::size_t& evals) {
  if (ps.dimension() != f.dimension) {
    throw std::invalid_argument("average: point dimension does not match integrand");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) sum += f(ps[i]);
  evals += ps.size();
  return sum / static_cast<double>(ps.size());
}

namespace {

using Clock = std::chrono::steady_clock;

struct Replication {
  double estimate = 0.0;
  std::size_t evals = 0;
  ShakeStats stats;
};

// Runs `one(rng)` for every replication on its own derived stream and
// assembles the report.
template <typename One>
EstimatorReport replicate(std::string method, std::size_t budget,
                          const Integrand& f, const RunOptions& opts,
                          One&& one) {
  if (opts.replications == 0) {
    throw std::invalid_argument(method + ": replications must be >= 1");
  }
  EstimatorReport report;
  report.method = std::move(method);
  report.budget = budget;
  report.seed = opts.seed;
  std::vector<Replication> reps(opts.replications);
  detail::parallel_for(opts.replications, opts.threads, [&](std::size_t r) {
    RandomStream rng(derive_seed(opts.seed, r));
    reps[r] = one(rng);
  });
  for (const auto& r : reps) {
    report.estimates.push_back(r.estimate);
    report.total_evals += r.evals;
    report.resamples += r.stats.resamples;
    report.fallback_cells += r.stats.fallback_cells;
  }
  report.n_evals = report.total_evals / opts.replications;
  summarize(report, f.referent);
  return report;
}

void check_dimension(const Integrand& f, const char* who) {
  if (f.dimension == 0 || !f.eval) {
    throw std::invalid_argument(std::string(who) + ": integrand is not set up");
  }
}

}  // namespace

EstimatorReport plain_mc(const Integrand& f, std::size_t n,
                         const RunOptions& opts) {
  check_dimension(f, "plain_mc");
  if (n == 0) throw std::invalid_argument("plain_mc: n must be >= 1");
  const auto start = Clock::now();
  const std::size_t d = f.dimension;
  auto report = replicate("plain-mc", n, f, opts, [&](RandomStream& rng) {
    Replication rep;
    std::vector<double> x(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& xi : x) xi = rng.uniform01();
      sum += f(x);
    }
    rep.evals = n;
    rep.estimate = sum / static_cast<double>(n);
    return rep;
  });
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

EstimatorReport qmc_sobol(const Integrand& f, std::size_t n,
                          const RunOptions& opts) {
  check_dimension(f, "qmc_sobol");
  if (n == 0) throw std::invalid_argument("qmc_sobol: n must be >= 1");
  const auto start = Clock::now();
  const PointSet pts = generate(f.dimension, n, opts.skip_zero,
                                opts.direction_table());
  EstimatorReport report;
  report.method = "qmc-sobol";
  report.budget = n;
  report.seed = opts.seed;
  report.estimates.push_back(average(f, pts, report.total_evals));
  report.n_evals = report.total_evals;
  summarize(report, f.referent);
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

EstimatorReport mca_mss_1(const Integrand& f, std::size_t n,
                          const RunOptions& opts) {
  check_dimension(f, "mca_mss_1");
  if (n == 0) throw std::invalid_argument("mca_mss_1: n must be >= 1");
  const auto start = Clock::now();
  const PointSet centers = generate(f.dimension, n, opts.skip_zero,
                                    opts.direction_table());
  const auto resolved = resolve_rho(opts.shake, centers);
  const double rho = resolved.first;
  auto report = replicate("mss1", n, f, opts, [&](RandomStream& rng) {
    Replication rep;
    const auto sample = shake_points(centers, rho, opts.shake, rng);
    rep.estimate = average(f, sample.points, rep.evals);
    rep.stats = sample.stats;
    return rep;
  });
  report.rho = rho;
  report.kappa = opts.shake.kappa;
  report.delta = resolved.second;
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

EstimatorReport mca_mss_2(const Integrand& f, std::size_t m,
                          const RunOptions& opts) {
  check_dimension(f, "mca_mss_2");
  if (m == 0) throw std::invalid_argument("mca_mss_2: m must be >= 1");
  const auto start = Clock::now();
  const Mss2Plan plan(f.dimension, m, opts.shake, opts.direction_table());
  auto report = replicate("mss2", m, f, opts, [&](RandomStream& rng) {
    Replication rep;
    const auto sample = symmetrized_shaken_points(plan, opts.shake, rng);
    rep.estimate = average(f, sample.points, rep.evals);
    rep.stats = sample.stats;
    return rep;
  });
  report.rho = plan.rho;
  report.kappa = opts.shake.kappa;
  report.delta = plan.delta;
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

EstimatorReport mca_mss_2s(const Integrand& f, std::size_t m,
                           const RunOptions& opts) {
  check_dimension(f, "mca_mss_2s");
  if (m == 0) throw std::invalid_argument("mca_mss_2s: m must be >= 1");
  const auto start = Clock::now();
  auto report = replicate("mss2s", m, f, opts, [&](RandomStream& rng) {
    Replication rep;
    const auto pts = stratified_symmetric_points(f.dimension, m, rng);
    rep.estimate = average(f, pts, rep.evals);
    return rep;
  });
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace qmcshake

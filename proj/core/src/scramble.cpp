#include "qmcshake/scramble.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "qmcshake/random.hpp"
#include "qmcshake/sobol.hpp"

namespace qmcshake {

void ScrambleSpec::validate() const {
  if (digits < 1 || digits > 64) {
    throw std::invalid_argument("ScrambleSpec: digits must be in [1, 64], got " +
                                std::to_string(digits));
  }
}

std::uint64_t scramble_digits(std::uint64_t x, std::size_t dim,
                              const ScrambleSpec& spec) {
  if (spec.seed == ScrambleSpec::kIdentitySeed) return x;
  const std::uint64_t dim_key = mix64(spec.seed ^ mix64(dim + 1));
  std::uint64_t flips = 0;
  for (unsigned l = 1; l <= spec.digits; ++l) {
    // Digits 1..l-1 with a leading 1 marker, so prefixes of different
    // lengths never collide.
    const std::uint64_t prefix =
        l == 1 ? 1u : ((std::uint64_t{1} << (l - 1)) | (x >> (65 - l)));
    const std::uint64_t h = mix64(dim_key ^ mix64(prefix));
    flips |= (h >> 63) << (64 - l);
  }
  return x ^ flips;
}

double scramble_coordinate(double x, std::size_t dim, const ScrambleSpec& spec) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::invalid_argument("scramble_coordinate: x outside [0,1)");
  }
  const auto fixed = static_cast<std::uint64_t>(std::ldexp(x, 64));
  const std::uint64_t z = scramble_digits(fixed, dim, spec);
  // Keep 53 leading digits so the result is exactly representable and < 1.
  return std::ldexp(static_cast<double>(z >> 11), -53);
}

PointSet owen_scramble(const PointSet& ps, const ScrambleSpec& spec) {
  spec.validate();
  const std::size_t d = ps.dimension();
  std::vector<double> out(ps.coords().begin(), ps.coords().end());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out[i * d + j] = scramble_coordinate(out[i * d + j], j, spec);
    }
  }
  return PointSet(d, std::move(out), Provenance::Scrambled);
}

EstimatorReport owen_qmc(const Integrand& f, std::size_t n,
                         const RunOptions& opts, unsigned digits) {
  if (n == 0) throw std::invalid_argument("owen_qmc: n must be >= 1");
  if (opts.replications == 0) {
    throw std::invalid_argument("owen_qmc: replications must be >= 1");
  }
  ScrambleSpec{0, digits}.validate();
  const auto start = std::chrono::steady_clock::now();
  const PointSet base = generate(f.dimension, n, opts.skip_zero,
                                 opts.direction_table());

  EstimatorReport report;
  report.method = "owen-qmc";
  report.budget = n;
  report.seed = opts.seed;
  report.estimates.resize(opts.replications);
  std::vector<std::size_t> evals(opts.replications, 0);
  detail::parallel_for(opts.replications, opts.threads, [&](std::size_t r) {
    const ScrambleSpec spec{derive_seed(opts.seed, r), digits};
    report.estimates[r] = average(f, owen_scramble(base, spec), evals[r]);
  });
  for (auto e : evals) report.total_evals += e;
  report.n_evals = report.total_evals / opts.replications;
  summarize(report, f.referent);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qmcshake

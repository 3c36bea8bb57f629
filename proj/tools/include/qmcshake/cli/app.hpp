#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmcshake/estimators.hpp"
#include "qmcshake/methods.hpp"
#include "qmcshake/sensitivity.hpp"

namespace qmcshake::cli {

enum class Command { Integrate, Converge, Sens, Netcheck };
enum class Format { Csv, Json, Table };

/// Validated settings for one invocation.
struct ExperimentConfig {
  Command command = Command::Integrate;
  Method method = Method::QmcSobol;
  std::string integrand = "f2-smooth";
  std::size_t dim = 4;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::vector<std::size_t> budgets;
  std::optional<double> rho;
  std::optional<double> kappa;
  std::size_t replications = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> scramble_seed;
  unsigned digits = 32;
  unsigned threads = 1;
  unsigned max_resamples = 100;
  BoundaryPolicy boundary = BoundaryPolicy::Resample;
  bool skip_zero = false;
  bool timing = false;
  std::string directions;  // direction-number file; shipped table when empty
  std::string out;         // stdout when empty
  Format format = Format::Csv;

  // sens
  SamplerKind sampler = SamplerKind::QmcSobol;
  bool first_order = true;
  bool total = true;
  std::vector<std::vector<std::size_t>> subsets;  // 1-based
  bool centered = true;
  std::size_t n_pilot = 0;

  // netcheck
  std::optional<unsigned> t;
  bool scramble = false;
};

struct ParseResult {
  std::optional<ExperimentConfig> config;  // empty when help was printed
  int exit_code = 0;
};

/// Parses command-line arguments (argv[0] is the program name). Prints usage
/// or the error to `out`/`err`; parse and validation failures give exit 2.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err);

/// Runs a validated config and returns the exit code: 0 on success, 2 for
/// configuration errors found late (bad model file, unknown id), 1 for
/// estimator failures. Output goes to cfg.out, or `out` when none is given;
/// nothing is written unless the run succeeds.
int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace qmcshake::cli

#include "qmcshake/cli/app.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmcshake/cli/emit.hpp"
#include "qmcshake/cli/registry.hpp"
#include "qmcshake/net.hpp"
#include "qmcshake/scramble.hpp"
#include "qmcshake/sobol.hpp"

namespace qmcshake::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::vector<std::string> method_ids() {
  std::vector<std::string> ids;
  for (auto m : all_methods()) ids.emplace_back(method_id(m));
  return ids;
}

std::vector<std::size_t> parse_subset(const std::string& text, std::size_t d) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v < 1 || (d && v > d)) {
      throw ConfigError("bad subset '" + text + "': indices are 1-based inputs");
    }
    idx.push_back(v);
  }
  if (idx.empty()) throw ConfigError("empty subset");
  return idx;
}

struct RawArgs {
  std::string method;
  std::string integrand = "f2-smooth";
  std::size_t dim = 4;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> budgets;
  double rho = 0.0;
  double kappa = 0.0;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  std::string scramble;
  std::uint64_t scramble_seed = 0;
  unsigned digits = 32;
  unsigned threads = 1;
  unsigned max_resamples = 100;
  std::string boundary = "resample";
  bool skip_zero = false;
  bool timing = false;
  std::string directions;
  std::string out;
  std::string format = "csv";
  std::string model;
  std::string sampler = "qmc-sobol";
  std::vector<std::string> subsets_kind;
  std::vector<std::string> subset;
  bool uncentered = false;
  std::size_t pilot = 0;
  unsigned t = 0;
};

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err) {
  RawArgs a;
  CLI::App app{"Quasi-Monte Carlo integration with shaken Sobol points",
               "qmc-shake"};
  app.set_config("--config", "", "key=value file with option defaults");
  app.require_subcommand(1, 1);

  auto* method = app.add_option("--method", a.method,
                                "Estimator: " + join(method_ids()));
  app.add_option("--integrand", a.integrand,
                 "Integrand: " + join(IntegrandRegistry::builtin().ids()));
  app.add_option("--dim", a.dim, "Dimension for linear-d and netcheck");
  auto* n = app.add_option("--n", a.n, "Point count");
  auto* m = app.add_option("--m", a.m,
                           "Cells per axis (mss2, mss2s); log2 of the point "
                           "count for netcheck");
  auto* budgets = app.add_option("--budgets", a.budgets,
                                 "Comma-separated n (or m) list for converge")
                      ->delimiter(',');
  auto* rho = app.add_option("--rho", a.rho, "Shake radius");
  auto* kappa = app.add_option("--kappa", a.kappa,
                               "Radius coefficient; rho = kappa * delta");
  auto* reps = app.add_option("--reps", a.reps, "Replications");
  app.add_option("--seed", a.seed, "Root seed")->envname("QMC_SHAKE_SEED");
  app.add_option("--scramble", a.scramble, "Scrambling: owen");
  auto* scramble_seed =
      app.add_option("--scramble-seed", a.scramble_seed, "Scramble seed");
  app.add_option("--digits", a.digits, "Scrambled digits (1..64)");
  app.add_option("--threads", a.threads, "Worker threads");
  app.add_option("--max-resamples", a.max_resamples,
                 "Sphere redraws allowed per point");
  app.add_option("--boundary", a.boundary, "resample | reject-run");
  app.add_flag("--skip-zero", a.skip_zero, "Drop the initial zero point");
  app.add_flag("--timing", a.timing, "Fill the time_s column");
  app.add_option("--directions", a.directions, "Direction-number file");
  app.add_option("--out", a.out, "Output file (stdout if omitted)");
  app.add_option("--format", a.format, "csv | json | table");
  auto* model = app.add_option("--model", a.model, "Polynomial model file");
  app.add_option("--sampler", a.sampler,
                 "Sensitivity sampler: plain-mc, qmc-sobol, owen-qmc, mss1");
  auto* subsets_kind =
      app.add_option("--subsets", a.subsets_kind, "first-order,total")
          ->delimiter(',');
  app.add_option("--subset", a.subset,
                 "Explicit input subset, e.g. 1,3 (repeatable)");
  app.add_flag("--uncentered", a.uncentered,
               "Skip the pilot centering of the model");
  app.add_option("--pilot", a.pilot, "Pilot sample size (default n)");
  auto* t = app.add_option("--t", a.t, "Net quality to verify");

  auto* integrate =
      app.add_subcommand("integrate", "Estimate one integral")->fallthrough();
  auto* converge =
      app.add_subcommand("converge", "Error decay over budgets")->fallthrough();
  auto* sens =
      app.add_subcommand("sens", "Global sensitivity indices")->fallthrough();
  auto* netcheck =
      app.add_subcommand("netcheck", "Elementary-interval test")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? 0 : 2};
  }

  try {
    ExperimentConfig c;
    if (integrate->parsed()) c.command = Command::Integrate;
    if (converge->parsed()) c.command = Command::Converge;
    if (sens->parsed()) c.command = Command::Sens;
    if (netcheck->parsed()) c.command = Command::Netcheck;

    if (a.format == "csv") c.format = Format::Csv;
    else if (a.format == "json") c.format = Format::Json;
    else if (a.format == "table") c.format = Format::Table;
    else throw ConfigError("unknown format '" + a.format + "'");

    if (a.boundary == "resample") c.boundary = BoundaryPolicy::Resample;
    else if (a.boundary == "reject-run") c.boundary = BoundaryPolicy::RejectRun;
    else throw ConfigError("unknown boundary policy '" + a.boundary + "'");

    if (!a.scramble.empty() && a.scramble != "owen") {
      throw ConfigError("unknown scramble '" + a.scramble + "'");
    }
    c.scramble = !a.scramble.empty();
    if (scramble_seed->count()) c.scramble_seed = a.scramble_seed;
    if (a.digits < 1 || a.digits > 64) throw ConfigError("--digits must be in 1..64");
    if (a.threads < 1) throw ConfigError("--threads must be >= 1");
    if (a.max_resamples < 1) throw ConfigError("--max-resamples must be >= 1");
    if (rho->count() && !(a.rho > 0.0)) throw ConfigError("--rho must be > 0");
    if (kappa->count() && !(a.kappa > 0.0)) throw ConfigError("--kappa must be > 0");

    c.integrand = a.integrand;
    c.dim = a.dim;
    if (rho->count()) c.rho = a.rho;
    if (kappa->count()) c.kappa = a.kappa;
    c.seed = a.seed;
    c.digits = a.digits;
    c.threads = a.threads;
    c.max_resamples = a.max_resamples;
    c.skip_zero = a.skip_zero;
    c.timing = a.timing;
    c.directions = a.directions;
    c.out = a.out;
    if (n->count()) c.n = a.n;
    if (m->count()) c.m = a.m;

    if (c.command == Command::Integrate || c.command == Command::Converge) {
      if (!method->count()) throw ConfigError("--method is required");
      const auto parsed = parse_method(a.method);
      if (!parsed) throw ConfigError("unknown method '" + a.method + "'");
      c.method = *parsed;
      if (c.scramble) {
        if (c.method != Method::QmcSobol && c.method != Method::OwenQmc) {
          throw ConfigError("--scramble owen applies to qmc-sobol only");
        }
        c.method = Method::OwenQmc;
      }
      if (!IntegrandRegistry::builtin().contains(c.integrand)) {
        throw ConfigError("unknown integrand '" + c.integrand + "'");
      }
      if (uses_shake(c.method)) {
        if (c.rho.has_value() == c.kappa.has_value()) {
          throw ConfigError(std::string(method_id(c.method)) +
                            " needs exactly one of --rho and --kappa");
        }
      } else if (c.rho || c.kappa) {
        throw ConfigError("--rho/--kappa apply only to mss1 and mss2");
      }
      c.replications = reps->count()
                           ? a.reps
                           : (c.command == Command::Converge ? 10 : 1);
      if (c.replications < 1) throw ConfigError("--reps must be >= 1");

      if (c.command == Command::Integrate) {
        const bool cells = uses_cells(c.method);
        if (cells && !c.m) throw ConfigError(std::string(method_id(c.method)) + " needs --m");
        if (!cells && !c.n) throw ConfigError(std::string(method_id(c.method)) + " needs --n");
        if (cells && c.n) throw ConfigError("--n does not apply to cell methods; use --m");
        if (!cells && c.m) throw ConfigError("--m applies to mss2 and mss2s; use --n");
        if ((c.n && *c.n == 0) || (c.m && *c.m == 0)) {
          throw ConfigError("budget must be >= 1");
        }
      } else {
        if (!budgets->count()) throw ConfigError("converge needs --budgets");
        c.budgets = a.budgets;
        if (c.budgets.size() < 3) throw ConfigError("converge needs at least 3 budgets");
        for (std::size_t i = 0; i < c.budgets.size(); ++i) {
          if (c.budgets[i] == 0 || (i && c.budgets[i] <= c.budgets[i - 1])) {
            throw ConfigError("budgets must be positive and strictly increasing");
          }
        }
        if (is_randomized(c.method) && c.replications < 5) {
          throw ConfigError("converge needs --reps >= 5 for randomized methods");
        }
      }
    }

    if (c.command == Command::Sens) {
      if (model->count()) c.integrand = std::string(kPolyFilePrefix) + a.model;
      if (!IntegrandRegistry::builtin().contains(c.integrand)) {
        throw ConfigError("unknown integrand '" + c.integrand + "'");
      }
      const auto s = parse_sampler(a.sampler);
      if (!s) throw ConfigError("unknown sampler '" + a.sampler + "'");
      c.sampler = *s;
      if (!c.n || *c.n == 0) throw ConfigError("sens needs --n >= 1");
      if (c.sampler == SamplerKind::Mss1) {
        if (c.rho && c.kappa) throw ConfigError("give at most one of --rho and --kappa");
      } else if (c.rho || c.kappa) {
        throw ConfigError("--rho/--kappa apply only to the mss1 sampler");
      }
      if (subsets_kind->count()) {
        c.first_order = c.total = false;
        for (const auto& k : a.subsets_kind) {
          if (k == "first-order") c.first_order = true;
          else if (k == "total") c.total = true;
          else throw ConfigError("unknown --subsets entry '" + k + "'");
        }
      }
      for (const auto& s_text : a.subset) c.subsets.push_back(parse_subset(s_text, 0));
      c.centered = !a.uncentered;
      c.n_pilot = a.pilot;
    }

    if (c.command == Command::Netcheck) {
      if (!c.m) throw ConfigError("netcheck needs --m (log2 of the point count)");
      if (*c.m > 24) throw ConfigError("netcheck supports --m up to 24");
      if (c.dim < 1) throw ConfigError("--dim must be >= 1");
      if (t->count()) {
        if (a.t > *c.m) throw ConfigError("--t must not exceed --m");
        c.t = a.t;
      }
    }
    return {c, 0};
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return {std::nullopt, 2};
  }
}

namespace {

std::string render(const ExperimentConfig& cfg, const DirectionTable& table) {
  const auto& registry = IntegrandRegistry::builtin();
  switch (cfg.command) {
    case Command::Integrate:
    case Command::Converge: {
      const auto f = registry.make(cfg.integrand, cfg.dim);
      MethodOptions opts;
      opts.replications = cfg.replications;
      opts.seed = cfg.method == Method::OwenQmc && cfg.scramble_seed
                      ? *cfg.scramble_seed
                      : cfg.seed;
      opts.threads = cfg.threads;
      opts.skip_zero = cfg.skip_zero;
      opts.shake.rho = cfg.rho;
      opts.shake.kappa = cfg.kappa;
      opts.shake.boundary = cfg.boundary;
      opts.shake.max_resamples = cfg.max_resamples;
      opts.table = &table;
      opts.scramble_digits = cfg.digits;
      if (cfg.command == Command::Integrate) {
        const auto budget = uses_cells(cfg.method) ? *cfg.m : *cfg.n;
        const auto r = run_method(cfg.method, f, budget, opts);
        const std::span<const EstimatorReport> rows(&r, 1);
        switch (cfg.format) {
          case Format::Csv: return rows_csv(rows, cfg.timing);
          case Format::Json: return rows_json(rows, cfg.timing);
          case Format::Table: return rows_table(rows, cfg.timing);
        }
      }
      const auto c = convergence_study(cfg.method, f, cfg.budgets, opts);
      switch (cfg.format) {
        case Format::Csv: return convergence_csv(c, cfg.timing);
        case Format::Json: return convergence_json(c, cfg.timing);
        case Format::Table: return convergence_table(c, cfg.timing);
      }
      break;
    }
    case Command::Sens: {
      const auto f = registry.make(cfg.integrand, cfg.dim);
      SamplerSpec s;
      s.kind = cfg.sampler;
      s.seed = cfg.seed;
      s.scramble_digits = cfg.digits;
      if (cfg.rho) {
        s.shake.rho = cfg.rho;
        s.shake.kappa.reset();
      } else if (cfg.kappa) {
        s.shake.kappa = cfg.kappa;
      }
      s.shake.boundary = cfg.boundary;
      s.shake.max_resamples = cfg.max_resamples;
      s.skip_zero = cfg.skip_zero;
      s.table = &table;
      ReportOptions ro;
      ro.first_order = cfg.first_order;
      ro.total = cfg.total;
      ro.centered = cfg.centered;
      ro.n_pilot = cfg.n_pilot;
      for (const auto& one_based : cfg.subsets) {
        std::vector<std::size_t> idx;
        for (auto i : one_based) {
          if (i > f.dimension) {
            throw ConfigError("subset index " + std::to_string(i) +
                              " exceeds the model dimension");
          }
          idx.push_back(i - 1);
        }
        try {
          ro.subsets.emplace_back(f.dimension, idx);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }
      const auto r = full_report(f, *cfg.n, s, ro);
      switch (cfg.format) {
        case Format::Csv: return sensitivity_csv(r);
        case Format::Json: return sensitivity_json(r);
        case Format::Table: return sensitivity_table(r);
      }
      break;
    }
    case Command::Netcheck: {
      const unsigned m = static_cast<unsigned>(*cfg.m);
      auto ps = generate(cfg.dim, std::size_t{1} << m, cfg.skip_zero, table);
      NetcheckRow row;
      row.dim = cfg.dim;
      row.m = m;
      if (cfg.scramble) {
        ScrambleSpec spec;
        spec.seed = cfg.scramble_seed ? *cfg.scramble_seed : cfg.seed;
        spec.digits = cfg.digits;
        ps = owen_scramble(ps, spec);
        row.scramble_seed = spec.seed;
      }
      row.t = cfg.t ? *cfg.t : net_quality(ps, m);
      const auto res = check_net_property(ps, row.t, m);
      row.passed = res.passed;
      row.intervals = res.intervals_checked;
      if (res.violation) row.violation = res.violation->describe();
      row.min_distance = ps.size() >= 2 ? min_pairwise_distance(ps) : 0.0;
      switch (cfg.format) {
        case Format::Csv: return netcheck_csv(row);
        case Format::Json: return netcheck_json(row);
        case Format::Table: return netcheck_table(row);
      }
      break;
    }
  }
  return {};
}

}  // namespace

int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    std::optional<DirectionTable> loaded;
    if (!cfg.directions.empty()) {
      try {
        loaded.emplace(DirectionTable::load(cfg.directions));
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
    }
    text = render(cfg, loaded ? *loaded : DirectionTable::shipped());
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write '" << cfg.out << "'\n";
    return 1;
  }
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  const auto parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace qmcshake::cli

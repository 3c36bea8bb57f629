#include "qmcshake/cli/emit.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "json.hpp"

namespace qmcshake::cli {

using json = nlohmann::ordered_json;

namespace {

std::string opt(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

json opt_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string time_cell(const EstimatorReport& r, bool timing) {
  return timing ? format_double(r.wall_time_s) : std::string();
}

json row_json(const EstimatorReport& r, bool timing) {
  json j;
  j["method"] = r.method;
  j["n"] = r.n_evals;
  j["rho"] = opt_json(r.rho);
  j["kappa"] = opt_json(r.kappa);
  j["estimate"] = r.estimate;
  j["rel_err"] = opt_json(r.relative_error);
  j["rmse"] = r.rmse;
  j["time_s"] = timing ? json(r.wall_time_s) : json(nullptr);
  j["seed"] = r.seed;
  return j;
}

// Left-aligned first column, right-aligned rest.
std::string align(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        line += fmt::format("{:<{}}", row[c], width[c]);
      } else {
        line += fmt::format("  {:>{}}", row[c], width[c]);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string short_double(const std::optional<double>& v) {
  return v ? fmt::format("{:.3g}", *v) : std::string("-");
}

std::vector<std::vector<std::string>> table_cells(
    std::span<const EstimatorReport> rows, bool timing) {
  std::vector<std::vector<std::string>> cells{
      {"method", "n", "rho", "estimate", "rel_err", "time_s"}};
  for (const auto& r : rows) {
    cells.push_back({r.method, std::to_string(r.n_evals), short_double(r.rho),
                     fmt::format("{:.8g}", r.estimate),
                     short_double(r.relative_error),
                     timing ? fmt::format("{:.4f}", r.wall_time_s) : "-"});
  }
  return cells;
}

std::string slope_text(const ConvergenceReport& c) {
  if (c.exact || !c.slope) return "exact";
  return format_double(*c.slope);
}

}  // namespace

std::string format_double(double v) { return fmt::format("{}", v); }

std::string rows_csv(std::span<const EstimatorReport> rows, bool timing) {
  std::string out = "method,n,rho,kappa,estimate,rel_err,rmse,time_s,seed\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.method, r.n_evals,
                       opt(r.rho), opt(r.kappa), format_double(r.estimate),
                       opt(r.relative_error), format_double(r.rmse),
                       time_cell(r, timing), r.seed);
  }
  return out;
}

std::string rows_json(std::span<const EstimatorReport> rows, bool timing) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(row_json(r, timing));
  return arr.dump(2) + "\n";
}

std::string rows_table(std::span<const EstimatorReport> rows, bool timing) {
  return align(table_cells(rows, timing));
}

std::string convergence_csv(const ConvergenceReport& c, bool timing) {
  std::vector<EstimatorReport> rows;
  for (const auto& r : c.rows) rows.push_back(r.report);
  return rows_csv(rows, timing) + "slope," + slope_text(c) + "\n";
}

std::string convergence_json(const ConvergenceReport& c, bool timing) {
  json j;
  j["method"] = std::string(method_id(c.method));
  j["rows"] = json::array();
  for (const auto& r : c.rows) j["rows"].push_back(row_json(r.report, timing));
  j["slope"] = (c.exact || !c.slope) ? json("exact") : json(*c.slope);
  return j.dump(2) + "\n";
}

std::string convergence_table(const ConvergenceReport& c, bool timing) {
  std::vector<EstimatorReport> rows;
  for (const auto& r : c.rows) rows.push_back(r.report);
  auto cells = table_cells(rows, timing);
  cells[0].push_back("rmse");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cells[i + 1].push_back(fmt::format("{:.3g}", rows[i].rmse));
  }
  return align(cells) + "slope " + slope_text(c) + "\n";
}

namespace {

struct SensLine {
  std::string kind;
  std::string target;
  std::string value;
  std::string std_error;
  std::string flag;
};

SensLine estimate_line(std::string kind, std::string target,
                       const std::optional<Estimate>& e) {
  if (!e) return {std::move(kind), std::move(target), "", "", "undefined"};
  return {std::move(kind), std::move(target), format_double(e->value),
          format_double(e->std_error), e->clamped ? "clamped" : ""};
}

std::vector<SensLine> sens_lines(const SensitivityReport& r) {
  std::vector<SensLine> lines;
  lines.push_back({"n", "", std::to_string(r.n), "", ""});
  lines.push_back({"seed", "", std::to_string(r.seed), "", ""});
  lines.push_back({"sampler", "", r.sampler, "", ""});
  lines.push_back({"centered", "", r.centered ? "true" : "false", "", ""});
  lines.push_back({"centering", "", format_double(r.centering), "", ""});
  lines.push_back({"evaluations", "", std::to_string(r.evaluations), "", ""});
  lines.push_back({"f0", "", format_double(r.f0), "", ""});
  auto d = estimate_line("D", "", r.D);
  if (r.D_degenerate) d.flag = "degenerate";
  lines.push_back(d);
  for (const auto& row : r.subsets) {
    lines.push_back(estimate_line("D_y", row.subset.label(), row.partial_variance));
    lines.push_back(estimate_line("S_y", row.subset.label(), row.index));
  }
  for (const auto& row : r.inputs) {
    const auto target = std::to_string(row.input + 1);
    if (r.D_degenerate || row.first_order) {
      lines.push_back(estimate_line("S_first", target, row.first_order));
    }
    if (r.D_degenerate || row.total) {
      lines.push_back(estimate_line("S_tot", target, row.total));
    }
  }
  return lines;
}

}  // namespace

std::string sensitivity_csv(const SensitivityReport& r) {
  std::string out = "kind,target,value,std_error,flag\n";
  for (const auto& l : sens_lines(r)) {
    // Subset labels contain commas.
    const auto target = l.target.find(',') == std::string::npos
                            ? l.target
                            : "\"" + l.target + "\"";
    out += fmt::format("{},{},{},{},{}\n", l.kind, target, l.value, l.std_error,
                       l.flag);
  }
  return out;
}

std::string sensitivity_json(const SensitivityReport& r) {
  json arr = json::array();
  for (const auto& l : sens_lines(r)) {
    arr.push_back({{"kind", l.kind},
                   {"target", l.target},
                   {"value", l.value},
                   {"std_error", l.std_error},
                   {"flag", l.flag}});
  }
  return arr.dump(2) + "\n";
}

std::string sensitivity_table(const SensitivityReport& r) {
  std::vector<std::vector<std::string>> cells{
      {"kind", "target", "value", "std_error", "flag"}};
  for (const auto& l : sens_lines(r)) {
    cells.push_back({l.kind, l.target, l.value, l.std_error, l.flag});
  }
  return align(cells);
}

std::string netcheck_csv(const NetcheckRow& r) {
  return fmt::format(
      "dim,m,points,t,passed,intervals,min_distance,scramble_seed\n"
      "{},{},{},{},{},{},{},{}\n",
      r.dim, r.m, std::size_t{1} << r.m, r.t, r.passed ? "true" : "false",
      r.intervals, format_double(r.min_distance),
      r.scramble_seed ? std::to_string(*r.scramble_seed) : "");
}

std::string netcheck_json(const NetcheckRow& r) {
  json j;
  j["dim"] = r.dim;
  j["m"] = r.m;
  j["points"] = std::size_t{1} << r.m;
  j["t"] = r.t;
  j["passed"] = r.passed;
  j["intervals"] = r.intervals;
  j["min_distance"] = r.min_distance;
  j["scramble_seed"] = r.scramble_seed ? json(*r.scramble_seed) : json(nullptr);
  if (!r.violation.empty()) j["violation"] = r.violation;
  return j.dump(2) + "\n";
}

std::string netcheck_table(const NetcheckRow& r) {
  std::string out = align(
      {{"dim", "m", "points", "t", "passed", "intervals", "min_distance"},
       {std::to_string(r.dim), std::to_string(r.m),
        std::to_string(std::size_t{1} << r.m), std::to_string(r.t),
        r.passed ? "yes" : "no", std::to_string(r.intervals),
        fmt::format("{:.6g}", r.min_distance)}});
  if (!r.violation.empty()) out += "violation: " + r.violation + "\n";
  return out;
}

}  // namespace qmcshake::cli

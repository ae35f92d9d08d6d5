#include "cateval/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "cateval/report_io.hpp"

namespace cateval {

std::vector<CurvePoint> variance_curves(std::span<const double> rhos, long long n_max) {
  if (n_max < 1) throw std::domain_error("variance_curves: n_max must be >= 1");
  for (const double rho : rhos) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("variance_curves: rho must be in [0,1]");
  }
  std::vector<CurvePoint> out;
  out.reserve(rhos.size() * static_cast<std::size_t>(n_max));
  for (const double rho : rhos) {
    const std::string label = "rho=" + format_number(rho, 3);
    for (long long n = 1; n <= n_max; ++n)
      out.push_back({static_cast<double>(n), variance_ratio(rho, n), label});
  }
  return out;
}

std::vector<CurvePoint> entropy_curve(long long grid_size) {
  if (grid_size < 2) throw std::domain_error("entropy_curve: grid_size must be >= 2");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(grid_size));
  const double n = static_cast<double>(grid_size);
  for (long long i = 1; i <= grid_size; ++i) {
    const double x = i == grid_size ? 1.0 : static_cast<double>(i) / n;
    out.push_back({x, entropy(x), "entropy"});
  }
  return out;
}

std::string_view to_string(SweepParam p) { return p == SweepParam::Alpha ? "alpha" : "beta"; }

std::vector<double> linear_grid(double start, double stop, long long steps) {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::domain_error("grid: non-finite bound");
  if (steps < 1) throw std::domain_error("grid: steps must be >= 1");
  if (steps == 1) {
    if (start != stop) throw std::domain_error("grid: a single step needs start == stop");
    return {start};
  }
  if (!(start < stop)) throw std::domain_error("grid: start must be below stop");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double step = (stop - start) / static_cast<double>(steps - 1);
  for (long long i = 0; i < steps - 1; ++i) out.push_back(start + static_cast<double>(i) * step);
  out.push_back(stop);
  return out;
}

std::vector<SweepRow> sweep(const Dataset& d, SweepParam param, std::span<const double> grid,
                            const EvalConfig& fixed) {
  if (grid.empty()) throw std::domain_error("sweep: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw std::domain_error("sweep: grid must be strictly increasing");
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double v : grid) {
    EvalConfig cfg = fixed;
    (param == SweepParam::Alpha ? cfg.alpha : cfg.beta) = v;
    cfg.validate();
    rows.push_back({param, v, param == SweepParam::Alpha ? cfg.beta : cfg.alpha, {}});
  }
  for (auto& row : rows) {
    EvalConfig cfg = fixed;
    (param == SweepParam::Alpha ? cfg.alpha : cfg.beta) = row.value;
    row.report = evaluate(d, cfg);
  }
  return rows;
}

std::string fraction_cell(std::size_t correct, std::size_t total) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.3f",
                total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total));
  return std::to_string(correct) + "/" + std::to_string(total) + " (" + ratio + ")";
}

ComparisonTable compare_report(std::span<const LabeledReport> reports) {
  if (reports.empty()) throw std::invalid_argument("compare_report: no reports");

  ComparisonTable table;
  for (const auto& [label, r] : reports) {
    table.rows.push_back({label, r.sensitivity, r.specificity, r.auc, r.cat_sen, r.cat_spe,
                          r.cat_mean});

    struct Cells {
      std::string sen = "-";
      std::string spe = "-";
    };
    std::map<std::string, Cells> by_cohort;
    for (const auto& row : r.cohort_table) {
      const auto& a = row.aggregate;
      auto& cells = by_cohort[a.cohort];
      (a.class_sign == ClassSign::Positive ? cells.sen : cells.spe) =
          fraction_cell(a.correct_tests, a.total_tests);
    }
    for (const auto& [cohort, cells] : by_cohort)
      table.cohort_lines.push_back({cohort, label, cells.sen, cells.spe});

    const auto& c = r.confusion;
    table.cohort_lines.push_back({label + " Overall", label,
                                  c.tp + c.fn ? fraction_cell(c.tp, c.tp + c.fn) : "-",
                                  c.tn + c.fp ? fraction_cell(c.tn, c.tn + c.fp) : "-"});
    table.cohort_lines.push_back(
        {"CATSensitivity", label, r.cat_sen ? format_number(*r.cat_sen, 3) : "-", "-"});
    table.cohort_lines.push_back(
        {"CATSpecificity", label, "-", r.cat_spe ? format_number(*r.cat_spe, 3) : "-"});
  }
  return table;
}

}  // namespace cateval

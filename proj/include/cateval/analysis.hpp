#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cateval/cat_metrics.hpp"

namespace cateval {

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  std::string series;
};

/// (n, variance_ratio(rho, n)) for every rho and n = 1..n_max, grouped by
/// rho in input order. Series labels read "rho=<value>".
std::vector<CurvePoint> variance_curves(std::span<const double> rhos, long long n_max);

/// entropy(x) on x = i / grid_size, i = 1..grid_size. Series "entropy".
/// Throws std::domain_error when grid_size < 2.
std::vector<CurvePoint> entropy_curve(long long grid_size);

enum class SweepParam { Alpha, Beta };

std::string_view to_string(SweepParam p);

struct SweepRow {
  SweepParam param = SweepParam::Alpha;
  double value = 0.0;
  double fixed_other = 0.0;  // beta for an alpha sweep and vice versa
  MetricsReport report;
};

/// `steps` evenly spaced points from start to stop inclusive. A single step
/// requires start == stop; otherwise start < stop.
/// Throws std::domain_error on a malformed grid.
std::vector<double> linear_grid(double start, double stop, long long steps);

/// One evaluate() per grid point, varying only `param`. The grid must be
/// strictly increasing and valid for the parameter.
/// Throws std::domain_error otherwise.
std::vector<SweepRow> sweep(const Dataset& d, SweepParam param, std::span<const double> grid,
                            const EvalConfig& fixed);

struct LabeledReport {
  std::string label;
  MetricsReport report;
};

/// Formatting-only view over several reports.
struct ComparisonTable {
  struct Row {
    std::string label;
    MetricValue sensitivity;
    MetricValue specificity;
    MetricValue auc;
    MetricValue cat_sen;
    MetricValue cat_spe;
    MetricValue cat_mean;
  };
  /// One line of the per-cohort breakdown. Cells are "correct/total (ratio)"
  /// or "-" when the class is absent.
  struct CohortLine {
    std::string group;
    std::string set;
    std::string sensitivity;
    std::string specificity;
  };
  std::vector<Row> rows;
  std::vector<CohortLine> cohort_lines;
};

/// "correct/total (0.xxx)".
std::string fraction_cell(std::size_t correct, std::size_t total);

/// Throws std::invalid_argument when `reports` is empty.
ComparisonTable compare_report(std::span<const LabeledReport> reports);

}  // namespace cateval

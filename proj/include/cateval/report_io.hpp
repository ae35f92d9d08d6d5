#pragma once

#include <ostream>
#include <span>
#include <string>

#include "cateval/analysis.hpp"
#include "cateval/cat_metrics.hpp"

namespace cateval {

/// Output precision for every numeric field written by the writers below.
inline constexpr int kReportDecimals = 6;

/// Marker written for NotDefined metrics.
inline constexpr const char* kNotDefined = "NaN";

enum class OutputFormat { Table, Json };

/// Fixed-point with `decimals` digits, negative zero printed as zero.
std::string format_number(double v, int decimals = kReportDecimals);
std::string format_metric(const MetricValue& v);

// Table form is comma-delimited text; Json is one document per call.
void write_report(std::ostream& out, const MetricsReport& r, OutputFormat fmt);
void write_sweep(std::ostream& out, std::span<const SweepRow> rows, OutputFormat fmt);
void write_curve(std::ostream& out, std::span<const CurvePoint> points, OutputFormat fmt);
void write_comparison(std::ostream& out, const ComparisonTable& t, bool per_cohort,
                      OutputFormat fmt);

}  // namespace cateval

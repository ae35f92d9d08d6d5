#include "cateval/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace cateval {

using nlohmann::ordered_json;

std::string format_number(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_metric(const MetricValue& v) { return v ? format_number(*v) : kNotDefined; }

namespace {

// Numbers in JSON carry the same rounding as the table form.
ordered_json json_number(double v) {
  return std::strtod(format_number(v).c_str(), nullptr);
}

ordered_json json_metric(const MetricValue& v) {
  if (!v) return kNotDefined;
  return json_number(*v);
}

std::string_view class_name(ClassSign s) { return s == ClassSign::Positive ? "positive" : "negative"; }

std::string join_sig(const std::set<std::string>& sig) {
  std::string out;
  for (const auto& c : sig) {
    if (!out.empty()) out += ';';
    out += c;
  }
  return out;
}

ordered_json metrics_json(const MetricsReport& r) {
  ordered_json j;
  j["accuracy"] = json_metric(r.accuracy);
  j["sensitivity"] = json_metric(r.sensitivity);
  j["specificity"] = json_metric(r.specificity);
  j["auc"] = json_metric(r.auc);
  j["cat_sen"] = json_metric(r.cat_sen);
  j["cat_spe"] = json_metric(r.cat_spe);
  j["cat_mean"] = json_metric(r.cat_mean);
  return j;
}

ordered_json report_json(const MetricsReport& r) {
  ordered_json j = metrics_json(r);
  j["tp"] = r.confusion.tp;
  j["fp"] = r.confusion.fp;
  j["tn"] = r.confusion.tn;
  j["fn"] = r.confusion.fn;
  j["alpha"] = json_number(r.config.alpha);
  j["beta"] = json_number(r.config.beta);
  j["sig"] = ordered_json::array();
  for (const auto& c : r.config.sig_cohorts) j["sig"].push_back(c);
  j["cohorts"] = ordered_json::array();
  for (const auto& row : r.cohort_table) {
    const auto& a = row.aggregate;
    j["cohorts"].push_back({{"cohort", a.cohort},
                            {"class", class_name(a.class_sign)},
                            {"sig", row.sig},
                            {"testers", a.tester_count},
                            {"tests", a.total_tests},
                            {"correct", a.correct_tests},
                            {"weighted_score", json_number(a.weighted_score)}});
  }
  return j;
}

constexpr const char* kMetricColumns = "accuracy,sensitivity,specificity,auc,cat_sen,cat_spe,cat_mean";

void write_metric_cells(std::ostream& out, const MetricsReport& r) {
  out << format_metric(r.accuracy) << ',' << format_metric(r.sensitivity) << ','
      << format_metric(r.specificity) << ',' << format_metric(r.auc) << ','
      << format_metric(r.cat_sen) << ',' << format_metric(r.cat_spe) << ','
      << format_metric(r.cat_mean);
}

}  // namespace

void write_report(std::ostream& out, const MetricsReport& r, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    out << report_json(r).dump(2) << '\n';
    return;
  }
  out << "metric,value\n";
  out << "accuracy," << format_metric(r.accuracy) << '\n';
  out << "sensitivity," << format_metric(r.sensitivity) << '\n';
  out << "specificity," << format_metric(r.specificity) << '\n';
  out << "auc," << format_metric(r.auc) << '\n';
  out << "cat_sen," << format_metric(r.cat_sen) << '\n';
  out << "cat_spe," << format_metric(r.cat_spe) << '\n';
  out << "cat_mean," << format_metric(r.cat_mean) << '\n';
  out << "tp," << r.confusion.tp << '\n';
  out << "fp," << r.confusion.fp << '\n';
  out << "tn," << r.confusion.tn << '\n';
  out << "fn," << r.confusion.fn << '\n';
  out << "alpha," << format_number(r.config.alpha) << '\n';
  out << "beta," << format_number(r.config.beta) << '\n';
  out << "sig," << join_sig(r.config.sig_cohorts) << '\n';
  out << '\n';
  out << "cohort,class,sig,testers,tests,correct,weighted_score\n";
  for (const auto& row : r.cohort_table) {
    const auto& a = row.aggregate;
    out << a.cohort << ',' << class_name(a.class_sign) << ',' << (row.sig ? 1 : 0) << ','
        << a.tester_count << ',' << a.total_tests << ',' << a.correct_tests << ','
        << format_number(a.weighted_score) << '\n';
  }
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      j["param"] = to_string(row.param);
      j["value"] = json_number(row.value);
      j["fixed"] = json_number(row.fixed_other);
      j.update(metrics_json(row.report));
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "param,value,fixed," << kMetricColumns << '\n';
  for (const auto& row : rows) {
    out << to_string(row.param) << ',' << format_number(row.value) << ','
        << format_number(row.fixed_other) << ',';
    write_metric_cells(out, row.report);
    out << '\n';
  }
}

void write_curve(std::ostream& out, std::span<const CurvePoint> points, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : points)
      arr.push_back({{"series", p.series}, {"x", json_number(p.x)}, {"y", json_number(p.y)}});
    out << arr.dump(2) << '\n';
    return;
  }
  out << "series,x,y\n";
  for (const auto& p : points)
    out << p.series << ',' << format_number(p.x) << ',' << format_number(p.y) << '\n';
}

void write_comparison(std::ostream& out, const ComparisonTable& t, bool per_cohort,
                      OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const auto& r : t.rows) {
      doc["rows"].push_back({{"label", r.label},
                             {"sensitivity", json_metric(r.sensitivity)},
                             {"specificity", json_metric(r.specificity)},
                             {"auc", json_metric(r.auc)},
                             {"cat_sen", json_metric(r.cat_sen)},
                             {"cat_spe", json_metric(r.cat_spe)},
                             {"cat_mean", json_metric(r.cat_mean)}});
    }
    if (per_cohort) {
      doc["cohorts"] = ordered_json::array();
      for (const auto& l : t.cohort_lines) {
        doc["cohorts"].push_back({{"group", l.group},
                                  {"set", l.set},
                                  {"sensitivity", l.sensitivity},
                                  {"specificity", l.specificity}});
      }
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "label,sensitivity,specificity,auc,cat_sen,cat_spe,cat_mean\n";
  for (const auto& r : t.rows) {
    out << r.label << ',' << format_metric(r.sensitivity) << ',' << format_metric(r.specificity)
        << ',' << format_metric(r.auc) << ',' << format_metric(r.cat_sen) << ','
        << format_metric(r.cat_spe) << ',' << format_metric(r.cat_mean) << '\n';
  }
  if (!per_cohort) return;
  out << '\n' << "group,set,sensitivity,specificity\n";
  for (const auto& l : t.cohort_lines)
    out << l.group << ',' << l.set << ',' << l.sensitivity << ',' << l.specificity << '\n';
}

}  // namespace cateval

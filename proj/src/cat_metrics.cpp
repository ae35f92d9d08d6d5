#include "cateval/cat_metrics.hpp"

#include <algorithm>
#include <cmath>

namespace cateval {

void EvalConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must be in [0,1]");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::domain_error("beta must be > 0");
}

double sig_weight(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("sig_weight: alpha must be in [0,1]");
  return 1.0 / (1.0 + std::exp(0.5 - alpha));
}

namespace {

struct SplitMeans {
  double sig_sum = 0.0;
  double other_sum = 0.0;
  std::size_t sig_n = 0;
  std::size_t other_n = 0;

  std::size_t total() const { return sig_n + other_n; }
  double sig_mean() const { return sig_sum / static_cast<double>(sig_n); }
  double other_mean() const { return other_sum / static_cast<double>(other_n); }
  double overall_mean() const { return (sig_sum + other_sum) / static_cast<double>(total()); }
};

SplitMeans split(std::span<const CohortAggregate> aggregates, ClassSign sign,
                 const std::set<std::string>& sig_cohorts) {
  SplitMeans s;
  for (const auto& a : aggregates) {
    if (a.class_sign != sign) continue;
    if (sig_cohorts.contains(a.cohort)) {
      s.sig_sum += a.weighted_score;
      ++s.sig_n;
    } else {
      s.other_sum += a.weighted_score;
      ++s.other_n;
    }
  }
  return s;
}

// sig_w * sig_mean + other_w * other_mean (weights sum to 1), kept inside the
// interval spanned by the two means.
double mix(const SplitMeans& s, double sig_w, double other_w) {
  if (s.sig_n == 0) return s.overall_mean();
  if (s.other_n == 0) return s.sig_mean();
  const double a = s.sig_mean();
  const double b = s.other_mean();
  const double v = sig_w * a + other_w * b;
  return std::clamp(v, std::min(a, b), std::max(a, b));
}

}  // namespace

double cat_sensitivity(std::span<const CohortAggregate> aggregates, const EvalConfig& config) {
  const auto s = split(aggregates, ClassSign::Positive, config.sig_cohorts);
  if (s.total() == 0) throw NoPositivesError("cat_sensitivity: no positive cohort aggregates");
  const double w = sig_weight(config.alpha);
  return mix(s, 1.0 - w, w);
}

double cat_specificity(std::span<const CohortAggregate> aggregates, const EvalConfig& config) {
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0))
    throw std::domain_error("cat_specificity: alpha must be in [0,1]");
  const auto s = split(aggregates, ClassSign::Negative, config.sig_cohorts);
  if (s.total() == 0) throw NoNegativesError("cat_specificity: no negative cohort aggregates");
  return mix(s, config.alpha, 1.0 - config.alpha);
}

double cat_mean(double cat_sen, double cat_spe, double beta) {
  if (!(cat_sen >= 0.0 && cat_sen <= 1.0)) throw std::domain_error("cat_mean: cat_sen outside [0,1]");
  if (!(cat_spe >= 0.0 && cat_spe <= 1.0)) throw std::domain_error("cat_mean: cat_spe outside [0,1]");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::domain_error("cat_mean: beta must be > 0");
  const double b2 = beta * beta;
  const double den = b2 * cat_sen + cat_spe;
  if (den == 0.0) return 0.0;
  return std::sqrt((1.0 + b2) * cat_sen * cat_spe / den);
}

MetricsReport evaluate(const Dataset& d, const EvalConfig& config) {
  config.validate();

  MetricsReport report;
  report.config = config;
  report.confusion = confusion(d);
  report.accuracy = accuracy(report.confusion);
  report.sensitivity = sensitivity(report.confusion);
  report.specificity = specificity(report.confusion);
  if (has_both_classes(d)) report.auc = auc(d);

  const auto testers = aggregate_testers(d);
  const auto aggregates = cohort_aggregates(testers);

  bool any_pos = false;
  bool any_neg = false;
  report.cohort_table.reserve(aggregates.size());
  for (const auto& a : aggregates) {
    (a.class_sign == ClassSign::Positive ? any_pos : any_neg) = true;
    report.cohort_table.push_back({a, config.sig_cohorts.contains(a.cohort)});
  }

  if (any_pos) report.cat_sen = cat_sensitivity(aggregates, config);
  if (any_neg) report.cat_spe = cat_specificity(aggregates, config);
  if (report.cat_sen && report.cat_spe)
    report.cat_mean = cat_mean(*report.cat_sen, *report.cat_spe, config.beta);
  return report;
}

}  // namespace cateval

#pragma once

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cateval/classic_metrics.hpp"
#include "cateval/cohort_weighting.hpp"

namespace cateval {

/// Evaluation parameters.
///
/// `alpha` in [0,1] shifts weight between sig and non-sig cohorts, `beta` > 0
/// balances sensitivity against specificity in CATMean, and `sig_cohorts`
/// names the high-priority cohorts.
struct EvalConfig {
  double alpha = 0.7;
  double beta = 0.5;
  std::set<std::string> sig_cohorts;

  /// Throws std::domain_error when alpha or beta is out of range.
  void validate() const;
};

class NoPositivesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoNegativesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CohortRow {
  CohortAggregate aggregate;
  bool sig = false;
};

struct MetricsReport {
  MetricValue accuracy;
  MetricValue sensitivity;
  MetricValue specificity;
  MetricValue auc;
  MetricValue cat_sen;
  MetricValue cat_spe;
  MetricValue cat_mean;
  ConfusionCounts confusion;
  std::vector<CohortRow> cohort_table;
  EvalConfig config;
};

/// Non-sig side weight 1 / (1 + e^(0.5 - alpha)); the sig side gets 1 - w.
/// Throws std::domain_error outside [0,1].
double sig_weight(double alpha);

/// Sigmoid-weighted mix of the sig and non-sig positive cohort means. Falls
/// back to the plain mean when either side is empty. Aggregates of the
/// negative class are ignored.
/// Throws NoPositivesError when no positive aggregate is given.
double cat_sensitivity(std::span<const CohortAggregate> aggregates, const EvalConfig& config);

/// Linear alpha mix of the sig and non-sig negative cohort means, with the
/// same empty-side fallback.
/// Throws NoNegativesError when no negative aggregate is given.
double cat_specificity(std::span<const CohortAggregate> aggregates, const EvalConfig& config);

/// sqrt((1 + b^2) sen spe / (b^2 sen + spe)); 0 when both inputs are 0.
/// Throws std::domain_error for inputs outside [0,1] or beta <= 0.
double cat_mean(double cat_sen, double cat_spe, double beta);

/// Full pipeline: testers, cohort aggregates, CAT metrics and the classic
/// baseline. Undefined metrics come back as NotDefined, never as an error.
MetricsReport evaluate(const Dataset& d, const EvalConfig& config);

}  // namespace cateval

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cateval/tester_aggregation.hpp"

namespace cateval {

enum class ClassSign { Positive, Negative };

inline ClassSign class_of(int true_label) {
  return true_label == 1 ? ClassSign::Positive : ClassSign::Negative;
}

struct TesterWeight {
  std::string tied_id;
  double share = 0.0;    // n_i / N within the cohort-class
  double entropy = 0.0;  // -share * ln(share)
};

/// Entropy-weighted score of one cohort restricted to one class.
struct CohortAggregate {
  std::string cohort;
  ClassSign class_sign = ClassSign::Positive;
  std::size_t tester_count = 0;
  std::size_t total_tests = 0;
  std::size_t correct_tests = 0;
  std::vector<TesterWeight> tester_weights;
  double weighted_score = 0.0;
};

class EmptyCohortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// -p ln p. Throws std::domain_error unless 0 < p <= 1.
double entropy(double p);

/// Aggregates testers that all share one cohort and one class. When every
/// entropy weight is zero (a single tester) the score falls back to the
/// unweighted mean accuracy.
/// Throws EmptyCohortError on empty input and std::invalid_argument on mixed
/// cohorts or classes.
CohortAggregate cohort_aggregate(std::span<const TesterAggregate> testers);

/// Groups testers by (cohort, class) and aggregates each group. Output is
/// ordered by cohort, positives before negatives.
std::vector<CohortAggregate> cohort_aggregates(std::span<const TesterAggregate> testers);

}  // namespace cateval

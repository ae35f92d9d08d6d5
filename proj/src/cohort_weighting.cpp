#include "cateval/cohort_weighting.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace cateval {

double entropy(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("entropy: p must be in (0,1]");
  if (p == 1.0) return 0.0;
  return -p * std::log(p);
}

CohortAggregate cohort_aggregate(std::span<const TesterAggregate> testers) {
  if (testers.empty()) throw EmptyCohortError("cohort_aggregate: no testers");

  CohortAggregate agg;
  agg.cohort = testers.front().cohort;
  agg.class_sign = class_of(testers.front().true_label);
  agg.tester_count = testers.size();

  for (const auto& t : testers) {
    if (t.cohort != agg.cohort || class_of(t.true_label) != agg.class_sign)
      throw std::invalid_argument("cohort_aggregate: testers span several cohorts or classes");
    if (t.n_tests == 0) throw std::invalid_argument("cohort_aggregate: tester with no tests");
    agg.total_tests += t.n_tests;
    agg.correct_tests += t.correct_count;
  }

  const double total = static_cast<double>(agg.total_tests);
  double weight_sum = 0.0;
  double weighted = 0.0;
  double plain = 0.0;
  agg.tester_weights.reserve(testers.size());
  for (const auto& t : testers) {
    const double share = static_cast<double>(t.n_tests) / total;
    const double e = entropy(share);
    agg.tester_weights.push_back({t.tied_id, share, e});
    weight_sum += e;
    weighted += e * t.accuracy;
    plain += t.accuracy;
  }

  agg.weighted_score =
      weight_sum > 0.0 ? weighted / weight_sum : plain / static_cast<double>(testers.size());
  return agg;
}

std::vector<CohortAggregate> cohort_aggregates(std::span<const TesterAggregate> testers) {
  std::map<std::pair<std::string, int>, std::vector<TesterAggregate>> groups;
  for (const auto& t : testers) {
    // Key 0 sorts positives first.
    groups[{t.cohort, t.true_label == 1 ? 0 : 1}].push_back(t);
  }
  std::vector<CohortAggregate> out;
  out.reserve(groups.size());
  for (const auto& [key, members] : groups) out.push_back(cohort_aggregate(members));
  return out;
}

}  // namespace cateval

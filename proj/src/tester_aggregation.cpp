#include "cateval/tester_aggregation.hpp"

#include <cmath>
#include <stdexcept>

namespace cateval {

std::vector<TesterAggregate> aggregate_testers(const Dataset& d) {
  std::vector<TesterAggregate> out;
  out.reserve(d.tester_count());
  const auto& records = d.records();

  for (const auto& [tied_id, rows] : d.tester_index()) {
    const auto& first = records[rows.front()];
    TesterAggregate t;
    t.tied_id = tied_id;
    t.cohort = first.cohort;
    t.true_label = first.true_label;
    t.n_tests = rows.size();
    for (const std::size_t i : rows) {
      const auto& r = records[i];
      t.positive_predictions += static_cast<std::size_t>(r.pred_label);
      if (r.pred_label == r.true_label) ++t.correct_count;
    }
    // Integer form of the score: positives count predicted positives,
    // negatives count predicted negatives.
    t.score = t.true_label == 1 ? t.positive_predictions : t.n_tests - t.positive_predictions;
    t.accuracy = static_cast<double>(t.score) / static_cast<double>(t.n_tests);
    out.push_back(std::move(t));
  }
  return out;
}

double variance_ratio(double rho, long long n) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("variance_ratio: rho must be in [0,1]");
  if (n < 1) throw std::domain_error("variance_ratio: n must be >= 1");
  const double dn = static_cast<double>(n);
  return (1.0 + rho * (dn - 1.0)) / dn;
}

}  // namespace cateval

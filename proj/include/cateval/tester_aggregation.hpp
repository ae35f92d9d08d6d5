#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cateval/data_model.hpp"

namespace cateval {

/// Patient-level summary of one tester's repeated tests.
///
/// `score` is |sum of predictions - (1 - y) * n|, which always equals the
/// number of correctly predicted tests; `accuracy` is score / n_tests.
struct TesterAggregate {
  std::string tied_id;
  std::string cohort;
  int true_label = 0;
  std::size_t n_tests = 0;
  std::size_t positive_predictions = 0;
  std::size_t correct_count = 0;
  std::size_t score = 0;
  double accuracy = 0.0;
};

/// One aggregate per tester, sorted by tied_id.
std::vector<TesterAggregate> aggregate_testers(const Dataset& d);

/// Ratio of tester-level to sample-level variance for n correlated tests with
/// intraclass correlation rho: (1 + rho (n - 1)) / n.
/// Throws std::domain_error when rho is outside [0,1] or n < 1.
double variance_ratio(double rho, long long n);

}  // namespace cateval

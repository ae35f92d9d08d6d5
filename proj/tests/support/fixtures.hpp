#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cateval/data_model.hpp"

namespace cateval::testing {

/// Per-cohort counts, one test per tester. A total of 0 means the class is
/// absent from the cohort.
struct CohortCounts {
  std::string cohort;
  std::size_t pos_correct = 0;
  std::size_t pos_total = 0;
  std::size_t neg_correct = 0;
  std::size_t neg_total = 0;
};

/// One record per tester, correct predictions first within each class.
Dataset one_test_per_tester(std::span<const CohortCounts> cohorts);

/// Held-out cohorts G13-G16.
std::vector<CohortCounts> test_set_counts();

/// Validation cohorts G1-G12 with G12's 5/5 in the negative column, exactly
/// as the cohort rows are printed.
std::vector<CohortCounts> validation_counts_as_printed();

/// Validation cohorts with G12's 5/5 moved to the positive column; the only
/// column assignment whose sums match the overall 432/504 and 180/214 line.
std::vector<CohortCounts> validation_counts_column_corrected();

/// Shorthand for building small datasets in tests:
/// {id, tied_id, cohort, y, yhat, proba}.
PredictionRecord rec(std::string id, std::string tied, std::string cohort, int y, int yhat,
                     double proba = 0.5);

}  // namespace cateval::testing

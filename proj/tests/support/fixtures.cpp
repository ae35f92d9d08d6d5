#include "fixtures.hpp"

namespace cateval::testing {

PredictionRecord rec(std::string id, std::string tied, std::string cohort, int y, int yhat,
                     double proba) {
  return {std::move(id), std::move(tied), std::move(cohort), y, yhat, proba};
}

Dataset one_test_per_tester(std::span<const CohortCounts> cohorts) {
  std::vector<PredictionRecord> records;
  std::size_t next = 1;
  auto add = [&](const std::string& cohort, int y, std::size_t correct, std::size_t total) {
    for (std::size_t i = 0; i < total; ++i) {
      const int yhat = i < correct ? y : 1 - y;
      const std::string n = std::to_string(next++);
      records.push_back(rec("r" + n, "t" + n, cohort, y, yhat, yhat == 1 ? 0.8 : 0.2));
    }
  };
  for (const auto& c : cohorts) {
    add(c.cohort, 1, c.pos_correct, c.pos_total);
    add(c.cohort, 0, c.neg_correct, c.neg_total);
  }
  return Dataset::from_records(std::move(records));
}

std::vector<CohortCounts> test_set_counts() {
  return {
      {"G13", 29, 56, 50, 50},
      {"G14", 0, 0, 9, 21},
      {"G15", 0, 0, 79, 82},
      {"G16", 0, 0, 11, 12},
  };
}

std::vector<CohortCounts> validation_counts_as_printed() {
  return {
      {"G1", 74, 74, 0, 0},    {"G2", 115, 118, 0, 0}, {"G3", 6, 13, 0, 0},
      {"G4", 1, 3, 70, 97},    {"G5", 88, 105, 0, 0},  {"G6", 42, 59, 0, 0},
      {"G7", 14, 15, 0, 0},    {"G8", 20, 30, 32, 39}, {"G9", 47, 57, 0, 0},
      {"G10", 20, 25, 0, 0},   {"G11", 0, 0, 78, 78},  {"G12", 0, 0, 5, 5},
  };
}

std::vector<CohortCounts> validation_counts_column_corrected() {
  auto counts = validation_counts_as_printed();
  counts.back() = {"G12", 5, 5, 0, 0};
  return counts;
}

}  // namespace cateval::testing

#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cateval {

/// One test event: a single prediction for one tester.
struct PredictionRecord {
  std::string id;
  std::string tied_id;
  std::string cohort;
  int true_label = 0;  // 1 = positive, 0 = negative
  int pred_label = 0;
  double pred_proba = 0.0;

  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

inline constexpr std::string_view kDatasetHeader =
    "ID,tiedID,cohort,truelabel,predlabel,predproba";

enum class DataErrorKind {
  MalformedInput,
  ConflictingLabel,
  ConflictingCohort,
  DuplicateId,
  EmptyInput,
};

std::string_view to_string(DataErrorKind kind);

/// A single invariant violation. `row` is the 1-based data row (header
/// excluded); 0 when the violation is not tied to a row.
struct Violation {
  DataErrorKind kind;
  std::size_t row = 0;
  std::string id;
  std::string message;
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(Violation v);

  DataErrorKind kind() const { return violation_.kind; }
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Every violation in `records`, in row order. Empty iff the records form a
/// valid Dataset.
std::vector<Violation> validate_records(std::span<const PredictionRecord> records);

/// Validated, immutable collection of records with tester and cohort indexes.
///
/// Indexes are ordered maps so that iteration is deterministic. Tester index
/// entries are positions into records(), in row order.
class Dataset {
 public:
  /// Throws DataError carrying the first violation when invalid.
  static Dataset from_records(std::vector<PredictionRecord> records);

  const std::vector<PredictionRecord>& records() const { return records_; }
  const std::map<std::string, std::vector<std::size_t>>& tester_index() const {
    return tester_index_;
  }
  const std::map<std::string, std::set<std::string>>& cohort_index() const {
    return cohort_index_;
  }

  std::size_t size() const { return records_.size(); }
  std::size_t tester_count() const { return tester_index_.size(); }
  std::size_t cohort_count() const { return cohort_index_.size(); }

 private:
  Dataset() = default;

  std::vector<PredictionRecord> records_;
  std::map<std::string, std::vector<std::size_t>> tester_index_;
  std::map<std::string, std::set<std::string>> cohort_index_;
};

/// Always empty for a constructed Dataset; kept for symmetry with
/// validate_records.
std::vector<Violation> validate_dataset(const Dataset& d);

/// Parses the comma-delimited format headed by kDatasetHeader.
/// Throws DataError (MalformedInput, ConflictingLabel, ConflictingCohort,
/// DuplicateId, EmptyInput).
Dataset parse_dataset(std::istream& in);
Dataset parse_dataset(std::string_view text);
Dataset load_dataset(const std::string& path);

/// Writes the header and one line per record. Probabilities use the shortest
/// decimal form that parses back to the same double.
void write_dataset(std::ostream& out, const Dataset& d);
std::string serialize_dataset(const Dataset& d);

std::string format_probability(double p);

}  // namespace cateval

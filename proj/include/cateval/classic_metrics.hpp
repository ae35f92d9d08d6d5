#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "cateval/data_model.hpp"

namespace cateval {

/// A metric value, or std::nullopt when it is not defined (empty class).
using MetricValue = std::optional<double>;

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

class DegenerateClassesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ConfusionCounts confusion(const Dataset& d);

/// Record-level metrics. Each is NotDefined when its denominator is zero.
MetricValue accuracy(const ConfusionCounts& c);
MetricValue sensitivity(const ConfusionCounts& c);
MetricValue specificity(const ConfusionCounts& c);

/// Mann-Whitney AUC over pred_proba, ties counted as half.
/// Throws DegenerateClassesError when either class is absent.
double auc(const Dataset& d);

bool has_both_classes(const Dataset& d);

}  // namespace cateval

#include "cateval/classic_metrics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace cateval {

ConfusionCounts confusion(const Dataset& d) {
  ConfusionCounts c;
  for (const auto& r : d.records()) {
    if (r.true_label == 1) {
      (r.pred_label == 1 ? c.tp : c.fn) += 1;
    } else {
      (r.pred_label == 1 ? c.fp : c.tn) += 1;
    }
  }
  return c;
}

namespace {

MetricValue ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

MetricValue accuracy(const ConfusionCounts& c) { return ratio(c.tp + c.tn, c.total()); }
MetricValue sensitivity(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fn); }
MetricValue specificity(const ConfusionCounts& c) { return ratio(c.tn, c.tn + c.fp); }

bool has_both_classes(const Dataset& d) {
  bool pos = false;
  bool neg = false;
  for (const auto& r : d.records()) {
    (r.true_label == 1 ? pos : neg) = true;
    if (pos && neg) return true;
  }
  return false;
}

double auc(const Dataset& d) {
  const auto& records = d.records();
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].pred_proba < records[b].pred_proba;
  });

  // Sum of midranks (1-based) of the positives.
  double positive_rank_sum = 0.0;
  std::size_t positives = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && records[order[j]].pred_proba == records[order[i]].pred_proba) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (records[order[k]].true_label == 1) {
        positive_rank_sum += midrank;
        ++positives;
      }
    }
    i = j;
  }

  const std::size_t negatives = records.size() - positives;
  if (positives == 0 || negatives == 0)
    throw DegenerateClassesError("auc: both classes must be present");

  const double p = static_cast<double>(positives);
  const double u = positive_rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(negatives));
}

}  // namespace cateval

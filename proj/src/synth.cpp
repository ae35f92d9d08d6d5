#include "cateval/synth.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace cateval {

void SynthSpec::validate() const {
  if (n_items < 1) throw SpecError("n_items must be >= 1");
  if (n_testers < 1 || n_testers > n_items) throw SpecError("n_testers must be in [1, n_items]");
  if (n_cohorts < 1 || n_cohorts > n_testers) throw SpecError("n_cohorts must be in [1, n_testers]");
  if (!(positive_ratio > 0.0 && positive_ratio < 1.0)) throw SpecError("positive ratio must be in (0,1)");
  if (!(precision_lo > 0.0 && precision_lo <= precision_hi && precision_hi <= 1.0))
    throw SpecError("precision range must satisfy 0 < lo <= hi <= 1");
}

SynthSpec preset_a(std::uint64_t seed) {
  return SynthSpec{100, 30, 10, 0.6, 0.85, 0.90, seed};
}

SynthSpec preset_b(std::uint64_t seed) {
  return SynthSpec{50, 15, 6, 0.6, 0.85, 0.90, seed};
}

SynthSpec preset(std::string_view name, std::uint64_t seed) {
  if (name == "A" || name == "a") return preset_a(seed);
  if (name == "B" || name == "b") return preset_b(seed);
  throw SpecError("unknown preset '" + std::string(name) + "'");
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n).
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return static_cast<std::size_t>(x % bound);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::string padded(char prefix, std::size_t value, std::size_t max_value) {
  const int width = static_cast<int>(std::to_string(max_value).size());
  char buf[40];
  std::snprintf(buf, sizeof buf, "%c%0*zu", prefix, width, value);
  return buf;
}

// Picks testers to label positive so that their record total is as close as
// possible to `target` (ties toward the smaller total).
std::vector<bool> choose_positive_testers(const std::vector<std::size_t>& counts,
                                          const std::vector<std::size_t>& order,
                                          std::size_t target, std::size_t n_items) {
  const std::size_t n = order.size();
  std::vector<bool> positive(counts.size(), false);

  constexpr std::size_t kMaxCells = std::size_t{1} << 28;
  if ((n + 1) * (n_items + 1) > kMaxCells) {
    std::size_t sum = 0;
    for (const std::size_t t : order) {
      if (sum + counts[t] <= target) {
        positive[t] = true;
        sum += counts[t];
      }
    }
    return positive;
  }

  // reachable[k][s]: some subset of the first k testers in `order` sums to s.
  std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(n_items + 1, false));
  reachable[0][0] = true;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t c = counts[order[k - 1]];
    for (std::size_t s = 0; s <= n_items; ++s)
      reachable[k][s] = reachable[k - 1][s] || (s >= c && reachable[k - 1][s - c]);
  }

  std::size_t best = 0;
  std::size_t best_gap = target;
  for (std::size_t s = 0; s <= n_items; ++s) {
    if (!reachable[n][s]) continue;
    const std::size_t gap = s > target ? s - target : target - s;
    if (gap < best_gap) {
      best = s;
      best_gap = gap;
    }
  }

  std::size_t s = best;
  for (std::size_t k = n; k >= 1; --k) {
    if (reachable[k - 1][s]) continue;
    positive[order[k - 1]] = true;
    s -= counts[order[k - 1]];
  }
  return positive;
}

}  // namespace

Dataset generate_dataset(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const auto n_items = static_cast<std::size_t>(spec.n_items);
  const auto n_testers = static_cast<std::size_t>(spec.n_testers);
  const auto n_cohorts = static_cast<std::size_t>(spec.n_cohorts);

  std::vector<std::size_t> counts(n_testers, 1);
  for (std::size_t i = n_testers; i < n_items; ++i) ++counts[rng.below(n_testers)];

  std::vector<std::size_t> perm(n_testers);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);
  std::vector<std::size_t> cohort(n_testers);
  for (std::size_t i = 0; i < n_testers; ++i)
    cohort[perm[i]] = i < n_cohorts ? i : rng.below(n_cohorts);

  std::vector<std::size_t> order(n_testers);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);
  const auto target =
      static_cast<std::size_t>(std::llround(static_cast<double>(n_items) * spec.positive_ratio));
  const auto positive = choose_positive_testers(counts, order, target, n_items);

  // One slot per record, naming its tester, in shuffled row order.
  std::vector<std::size_t> slots;
  slots.reserve(n_items);
  for (std::size_t t = 0; t < n_testers; ++t) slots.insert(slots.end(), counts[t], t);
  rng.shuffle(slots);

  std::vector<PredictionRecord> records;
  records.reserve(n_items);
  for (std::size_t i = 0; i < n_items; ++i) {
    const std::size_t t = slots[i];
    PredictionRecord r;
    r.id = padded('R', i + 1, n_items);
    r.tied_id = padded('T', t + 1, n_testers);
    r.cohort = padded('C', cohort[t] + 1, n_cohorts);
    r.true_label = positive[t] ? 1 : 0;

    const double p_correct =
        spec.precision_lo + (spec.precision_hi - spec.precision_lo) * rng.uniform();
    const bool correct = rng.uniform() < p_correct;
    r.pred_label = correct ? r.true_label : 1 - r.true_label;

    const double u = rng.uniform();
    r.pred_proba = r.pred_label == 1 ? 1.0 - 0.5 * u : 0.5 * u;
    // 1 - 0.5u rounds to 0.5 for u within an ulp of 1; 0.5u itself is exact.
    if (r.pred_label == 1 && r.pred_proba <= 0.5) r.pred_proba = std::nextafter(0.5, 1.0);
    records.push_back(std::move(r));
  }
  return Dataset::from_records(std::move(records));
}

SynthSummary summarize(const Dataset& d) {
  std::size_t pos = 0;
  std::size_t correct = 0;
  for (const auto& r : d.records()) {
    pos += static_cast<std::size_t>(r.true_label);
    if (r.true_label == r.pred_label) ++correct;
  }
  const double n = static_cast<double>(d.size());
  return {static_cast<double>(pos) / n, static_cast<double>(correct) / n};
}

}  // namespace cateval

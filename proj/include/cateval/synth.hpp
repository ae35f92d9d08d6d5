#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "cateval/data_model.hpp"

namespace cateval {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SynthSpec {
  long long n_items = 100;
  long long n_testers = 30;
  long long n_cohorts = 10;
  double positive_ratio = 0.6;
  double precision_lo = 0.85;  // per-record probability that pred == truth
  double precision_hi = 0.90;
  std::uint64_t seed = 0;

  /// Throws SpecError on any violated field constraint.
  void validate() const;
};

/// 100 records, 30 testers, 10 cohorts, 6:4 positives, 85-90% correct.
SynthSpec preset_a(std::uint64_t seed);
/// 50 records, 15 testers, 6 cohorts, otherwise as preset A.
SynthSpec preset_b(std::uint64_t seed);
/// "A" or "B"; throws SpecError otherwise.
SynthSpec preset(std::string_view name, std::uint64_t seed);

/// Seeded deterministic generator. Identical specs give identical datasets on
/// every platform: the engine is std::mt19937_64 and every distribution is
/// computed from its raw 64-bit output here rather than through <random>.
Dataset generate_dataset(const SynthSpec& spec);

struct SynthSummary {
  double positive_fraction = 0.0;
  double correctness_rate = 0.0;
};

SynthSummary summarize(const Dataset& d);

}  // namespace cateval

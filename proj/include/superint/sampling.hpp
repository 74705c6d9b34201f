#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "superint/phase.hpp"

namespace superint {

// Where and how to draw verification points. box holds one (lo, hi) interval
// per phase coordinate in the order (q_1..q_N, p_1..p_N); empty means
// [-2, 2] everywhere. Position coordinates within `exclusion` of zero are
// rejected and redrawn, keeping samples away from the barrier singularities.
struct SampleSpec {
  int count = 1000;
  uint64_t seed = 42;
  std::vector<std::pair<double, double>> box;
  double exclusion = 0.1;
};

// Draw spec.count points of half-dimension n. Point i is produced from its
// own substream seeded by (spec.seed, i), so the result is independent of
// evaluation order and thread count. Throws SamplingError if a point cannot
// be produced after 1000 redraws.
std::vector<PhasePoint> sample_points(const SampleSpec& spec, int n);

// Single point of the stream, used by parallel drivers.
PhasePoint sample_one(const SampleSpec& spec, int n, int index);

}  // namespace superint

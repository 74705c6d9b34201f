#include "superint/sampling.hpp"

#include <cmath>

#include "superint/errors.hpp"
#include "superint/rng.hpp"

namespace superint {

PhasePoint sample_one(const SampleSpec& spec, int n, int index) {
  if (n < 1) throw DimensionError("sample_one: half-dimension must be positive");
  if (!spec.box.empty() && static_cast<int>(spec.box.size()) != 2 * n)
    throw DimensionError("sample_one: box does not match phase dimension");
  Xoshiro256pp rng(substream_seed(spec.seed, static_cast<uint64_t>(index)));
  auto interval = [&](int c) -> std::pair<double, double> {
    if (spec.box.empty()) return {-2.0, 2.0};
    return spec.box[c];
  };
  std::vector<double> q(n), p(n);
  for (int i = 0; i < n; ++i) {
    auto [lo, hi] = interval(i);
    int tries = 0;
    double v;
    do {
      if (++tries > 1000)
        throw SamplingError("rejection sampling exhausted (degenerate box)");
      v = rng.uniform(lo, hi);
    } while (std::abs(v) < spec.exclusion);
    q[i] = v;
  }
  for (int i = 0; i < n; ++i) {
    auto [lo, hi] = interval(n + i);
    p[i] = rng.uniform(lo, hi);
  }
  return PhasePoint(std::move(q), std::move(p));
}

std::vector<PhasePoint> sample_points(const SampleSpec& spec, int n) {
  std::vector<PhasePoint> pts;
  pts.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) pts.push_back(sample_one(spec, n, i));
  return pts;
}

}  // namespace superint

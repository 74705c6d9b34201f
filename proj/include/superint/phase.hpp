#pragma once

#include <cmath>
#include <vector>

#include "superint/errors.hpp"

namespace superint {

// Point (q, p) on a 2N-dimensional phase space. q and p always have equal
// length and finite entries.
struct PhasePoint {
  std::vector<double> q;
  std::vector<double> p;

  PhasePoint() = default;
  PhasePoint(std::vector<double> q_, std::vector<double> p_)
      : q(std::move(q_)), p(std::move(p_)) {
    if (q.size() != p.size() || q.empty())
      throw DimensionError("phase point needs matching nonempty q and p");
    for (double v : q)
      if (!std::isfinite(v)) throw DomainError("non-finite q component");
    for (double v : p)
      if (!std::isfinite(v)) throw DomainError("non-finite p component");
  }

  int dim() const { return static_cast<int>(q.size()); }
};

}  // namespace superint

#pragma once

#include <stdexcept>
#include <string>

namespace superint {

// Evaluating a field at a point where a guarded denominator or radical
// degenerates (|den| < eps_domain, radius < eps_domain, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Combining or evaluating fields over phase spaces of mismatched dimension.
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Model constructed with out-of-range parameters (k < 0, omega <= 0, n < 1).
struct ParameterError : std::runtime_error {
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Coordinate or label index outside the valid range.
struct IndexError : std::runtime_error {
  explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling failed to produce a point (degenerate box).
struct SamplingError : std::runtime_error {
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive integrator drove the step size below the representable minimum.
struct StepSizeError : std::runtime_error {
  explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

// Denominators (and the radial sqrt argument, scaled quadratically) smaller
// than this reject the evaluation point rather than clamping.
inline constexpr double eps_domain = 1e-9;

// Default half-width of the excluded slab around each |x_i| = 0 hyperplane
// when sampling verification points.
inline constexpr double eps_sampling = 0.1;

}  // namespace superint

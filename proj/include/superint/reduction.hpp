#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "superint/field.hpp"
#include "superint/sampling.hpp"

namespace superint {

// Quotient of the full phase space by the torus rotating each coordinate
// pair (2i-1, 2i), at the momentum-map level fixed by the barrier constants:
// the i-th angular momentum is sqrt(2 k_i) in the coulomb convention and
// sqrt(k_i) in the oscillator convention.
class ReductionMap {
 public:
  enum class Convention { coulomb, oscillator };

  static ReductionMap coulomb(const std::array<double, 3>& k);
  static ReductionMap oscillator(const std::array<double, 2>& k);

  Convention convention() const { return convention_; }
  int pairs() const { return static_cast<int>(k_.size()); }
  int full_half_dim() const { return 2 * pairs(); }
  int reduced_half_dim() const { return pairs(); }

  double cyclic_momentum(int i) const;  // 0-based pair index

  struct Projection {
    PhasePoint reduced;                  // (radii, radial momenta)
    std::vector<double> angles;          // polar angle of each pair, in (-pi, pi]
    std::vector<double> cyclic_momenta;  // angular momentum of each pair
  };

  // Pairwise polar decomposition of a full point. Throws DomainError when a
  // pair radius is within eps_domain of zero.
  Projection project(const PhasePoint& full) const;

  // Reconstruct the full point over `reduced` at the given angles, with each
  // pair's angular momentum pinned to cyclic_momentum(i).
  PhasePoint lift(const PhasePoint& reduced, std::span<const double> angles) const;

  // Angular momentum of each coordinate pair of a full point.
  std::vector<double> momentum_map(const PhasePoint& full) const;

 private:
  ReductionMap(Convention c, std::vector<double> k);
  Convention convention_;
  std::vector<double> k_;
};

// The pairwise polar chart as composable expressions: position and momentum
// of the full space written over the chart coordinates
// q = (radii, angles), p = (radial momenta, angular momenta). Substituting
// these into a full-space field yields its chart representation, which is a
// canonical transformation (brackets are preserved); the test suite checks
// that numerically.
struct ChartFields {
  std::vector<Field> qsub;
  std::vector<Field> psub;
};
ChartFields multipolar_chart(int pairs);

// Residuals are scaled by 1 + |reduced value|, matching the drift and
// commutation conventions; high-order integrals reach 1e7 on the sample box
// and an absolute comparison would sit below the rounding floor.
struct PullbackReport {
  double max_mismatch = 0.0;      // scaled |full at lift - reduced| over all draws
  double max_angle_spread = 0.0;  // scaled spread of the full value across angles
  int samples = 0;
  bool pass = false;
};

// Check that full_field, restricted to the momentum level set and pushed
// through lift, is angle-independent and equals reduced_field. Reduced
// points come from `spec` (empty box: radii in [0.3, 2], momenta in
// [-2, 2]); four angle tuples are drawn per point from a parallel stream.
PullbackReport pullback_check(const ReductionMap& map, const Field& full_field,
                              const Field& reduced_field, const SampleSpec& spec,
                              double tol);
PullbackReport pullback_check(const ReductionMap& map, const ComplexField& full_field,
                              const ComplexField& reduced_field,
                              const SampleSpec& spec, double tol);

struct SuiteEntry {
  std::string label;
  double tol;
  PullbackReport report;
};

struct ReductionSuiteResult {
  std::string family;
  std::vector<SuiteEntry> entries;
  double momentum_map_error = 0.0;  // max |ell_i(lift) - pinned value|
  double momentum_map_tol = 1e-12;
  bool pass = false;
};

// The standard consistency battery between a full model and its reduction.
// family is "coulomb" (coulomb6 vs coulomb3) or "oscillator" (oscillator4 vs
// oscillator2); overrides go to the reduced model's parameters, with the
// shared ones forwarded to the full model.
ReductionSuiteResult run_reduction_suite(
    const std::string& family,
    const std::map<std::string, double>& overrides, const SampleSpec& spec);

}  // namespace superint

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superint/models.hpp"
#include "superint/sampling.hpp"

namespace superint {

// jobs convention used by every kernel here: 1 runs the plain serial
// reference loop, 0 runs the OpenMP kernel with the runtime's default team,
// j > 1 runs OpenMP with j threads. Results are identical for every setting:
// point i draws from its own seed substream and reductions happen in index
// order after the parallel region.

struct IntegralResult {
  std::string label;
  int order = 0;
  double max_residual = 0.0;
};

// Normalized residual max_x |{H, I}| / (1 + |grad H| |grad I|) over the
// sampled points, one entry per declared integral.
std::vector<IntegralResult> check_commutation(const Model& model,
                                              const SampleSpec& spec, int jobs = 0);

// Numerical rank of the row-normalized gradient matrix of the given fields
// at x: singular values above sv_threshold times the largest one.
int independence_rank(const std::vector<Field>& fields, const PhasePoint& x,
                      double sv_threshold = 1e-8);

// Same with rows = hamiltonian plus all declared integrals.
int independence_rank(const Model& model, const PhasePoint& x,
                      double sv_threshold = 1e-8);

// Pairwise residual table over {H, I_1, ..., I_m}, H first: entry (a, b) is
// the max over points of the normalized |{F_a, F_b}|.
std::vector<std::vector<double>> involution_table(const Model& model,
                                                  const SampleSpec& spec,
                                                  int jobs = 0);

struct RankResult {
  int expected = 0;
  int observed_min = 0;
  double fraction = 0.0;  // of rank points achieving expected_rank exactly
};

struct VerificationReport {
  std::string model;
  std::map<std::string, double> params;
  uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;
  std::vector<IntegralResult> integrals;
  RankResult rank;
  std::vector<std::vector<double>> involution;
  bool pass = false;
  std::string timestamp;  // the only non-deterministic field
};

// Full campaign: involution table (whose H row gives the commutation
// residuals) over spec.count points, rank at the first min(count, 100)
// points. pass = every residual <= tol and rank fraction >= 0.95.
VerificationReport verify(const Model& model, const SampleSpec& spec, double tol,
                          int jobs = 0);

std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(const std::string& text);

// Write via a temp file in the target directory, then rename.
void write_report_atomic(const VerificationReport& report, const std::string& path);

}  // namespace superint

#pragma once

#include <complex>
#include <vector>

#include "superint/field.hpp"

namespace superint {

// Exact derivative via one forward-mode pass per direction; 2N passes total.
// Ordering: (df/dq_1 .. df/dq_N, df/dp_1 .. df/dp_N).
std::vector<double> gradient(const Field& f, const PhasePoint& x);

// Central-difference oracle with the same ordering.
std::vector<double> fd_gradient(const Field& f, const PhasePoint& x, double h);

// Canonical bracket {f,g} = sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i).
double poisson_bracket(const Field& f, const Field& g, const PhasePoint& x);
std::complex<double> poisson_bracket(const ComplexField& f, const ComplexField& g,
                                     const PhasePoint& x);

// Bracket value from precomputed gradients (both length 2N).
double bracket_from_gradients(const std::vector<double>& gf,
                              const std::vector<double>& gg);

double norm2_of(const std::vector<double>& v);

// |{f,g}| / (1 + |grad f| |grad g|), the residual scaling used throughout
// the verification suite.
double normalized_bracket_residual(const Field& f, const Field& g,
                                   const PhasePoint& x);

// Frequency data for the oscillator z-chart z_j = p_j - i n_j w x_j.
// n holds one positive multiplier per coordinate; coordinates 2k-1, 2k
// (1-based) share the multiplier of their pair.
struct Weights {
  std::vector<int> n;
  double omega = 1.0;

  Weights(std::vector<int> n_, double omega_);
  static Weights from_pairs(const std::vector<int>& pair_n, double omega);
};

// Bracket evaluated through Wirtinger derivatives in the z-chart:
//   {f,g} = -2 i w sum_k n_k sum_{j in pair k}
//               (df/dz_j dg/dzbar_j - df/dzbar_j dg/dz_j)
// Agrees with the canonical bracket; the pair of routes is cross-checked in
// the test suite.
std::complex<double> z_bracket(const ComplexField& f, const ComplexField& g,
                               const PhasePoint& x, const Weights& w);

}  // namespace superint

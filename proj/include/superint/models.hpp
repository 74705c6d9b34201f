#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "superint/field.hpp"

namespace superint {

struct Integral {
  std::string label;
  Field field;
  int order;  // leading degree in the momenta
};

struct Model {
  std::string name;
  int n = 0;  // phase-space half dimension
  std::map<std::string, double> params;
  Field hamiltonian;
  Field potential;  // H = |p|^2/2 + potential(q); used by the splitting integrators
  std::vector<Integral> integrals;
  int expected_rank = 0;
  std::string singular_set;

  const Integral& integral(const std::string& label) const;
};

struct CoulombParams {
  double gamma = 1.0;
  std::array<double, 3> k{0.0, 0.0, 0.0};
};

struct OscillatorParams {
  double omega = 1.0;
  int n1 = 1;
  int n2 = 1;
  std::array<double, 2> k{0.0, 0.0};
};

// 6d Coulomb system H = |p|^2/2 - gamma/r with the full so(4)-type symmetry
// set: 15 angular momenta L_ij and the 6 Laplace-Runge-Lenz components A_i.
// Redundant by design; expected rank 11.
Model coulomb6(double gamma);

// 3d reduction of coulomb6 by the (12)(34)(56) torus action: radial Coulomb
// motion with inverse-square barriers k_i/x_i^2. Integrals: the three
// rotation descendants I1, I2, I3, the Runge-Lenz squares T1, T2, T3, their
// sum T in closed form, and (when k3 = 0) the square root D of T3.
// Expected rank 5.
Model coulomb3_reduced(const CoulombParams& params);

// 4d anisotropic oscillator with frequencies (n1 w, n1 w, n2 w, n2 w).
// Integrals: L12, L34, the quadratic block tensors T11, T12, T22, T33, T34,
// T44, and the resonance coupling c13 (real and imaginary parts).
// Expected rank 7.
Model oscillator4(double omega, int n1, int n2);

// 2d reduction of oscillator4: caged oscillator with barriers k_i/(2 x_i^2).
// Integrals: E1, E2, Re and Im of the resonance invariant Q1, and the
// moduli I1, I2. When n1 = n2 = 1 also the rotation-type R_d; when
// (n1, n2) = (1, 2) and k2 = 0 also the parabolic-separation field R_e.
// Expected rank 3.
Model oscillator2_reduced(const OscillatorParams& params);

// Resonance coupling c_jk = z_j^{m_k} conj(z_k)^{m_j} of oscillator4, with
// z_j = p_j - i m_j w x_j and per-coordinate multipliers m = (n1,n1,n2,n2).
// j, k are 1-based coordinate labels in [1,4].
ComplexField jauch_hill(const Model& osc4, int j, int k);

// Generators of the torus-invariant functions on the oscillator4 phase
// space: xi1 = z1^2 + z2^2, eta1 = |z1|^2 + |z2|^2 and the same for the
// second pair (xi3, eta2). Returned as {xi1, eta1, xi3, eta2}.
std::array<ComplexField, 4> invariant_basis(const Model& osc4);

struct LabeledComplex {
  std::string label;
  ComplexField field;
};

// The invariant integral set of oscillator4 built from the basis above:
// E1, E2, Q1 = xi1^{n2} conj(xi3)^{n1}, and the moduli I1 = |xi1|^2,
// I2 = |xi3|^2.
std::vector<LabeledComplex> oscillator4_invariants(const Model& osc4);

// Complex resonance invariant of oscillator2_reduced, rebuilt from the
// model's parameters.
ComplexField oscillator2_q1(const Model& osc2);

// Names: coulomb6, coulomb3, oscillator4, oscillator2. Overrides map keys:
// gamma, k1..k3 (coulomb), omega, n1, n2, k1, k2 (oscillator). Throws
// IndexError for unknown names, ParameterError for unknown keys.
Model model_by_name(const std::string& name,
                    const std::map<std::string, double>& overrides = {});

std::vector<std::string> model_names();

}  // namespace superint

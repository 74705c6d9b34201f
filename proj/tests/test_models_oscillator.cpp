#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "superint/bracket.hpp"
#include "superint/dynamics.hpp"
#include "superint/models.hpp"
#include "superint/sampling.hpp"

using namespace superint;

namespace {

std::vector<PhasePoint> points(int n, int count, uint64_t seed = 13) {
  SampleSpec spec;
  spec.count = count;
  spec.seed = seed;
  return sample_points(spec, n);
}

double momentum_slope(const Field& f, const PhasePoint& x) {
  const double l1 = 1e3, l2 = 1e7;
  auto scaled = [&](double lam) {
    std::vector<double> p = x.p;
    for (double& v : p) v *= lam;
    return std::abs(f(PhasePoint(x.q, p)));
  };
  return std::log(scaled(l2) / scaled(l1)) / std::log(l2 / l1);
}

const PhasePoint kOrderPoint4({0.7, -1.1, 0.9, 0.8}, {0.8, 0.5, -1.2, -0.7});
const PhasePoint kOrderPoint2({0.7, -1.1}, {0.8, 0.5});

ComplexField z_of(const Model& osc4, int j) {  // 1-based
  std::array<int, 4> mlt;
  const int n1 = static_cast<int>(osc4.params.at("n1"));
  const int n2 = static_cast<int>(osc4.params.at("n2"));
  mlt = {n1, n1, n2, n2};
  const double w = osc4.params.at("omega");
  return {Field::p(j - 1, 4), (-mlt[j - 1] * w) * Field::q(j - 1, 4)};
}

double residual(const Model& m, const Field& f, const PhasePoint& x) {
  return normalized_bracket_residual(m.hamiltonian, f, x);
}

}  // namespace

TEST_CASE("oscillator4 catalog values") {
  Model m = oscillator4(1.0, 1, 2);
  CHECK(m.n == 4);
  CHECK(m.expected_rank == 7);
  CHECK(m.integrals.size() == 10);
  PhasePoint kin({0, 0, 0, 0}, {1, 0, 0, 0});
  CHECK(m.hamiltonian(kin) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(oscillator4(0.0, 1, 1), ParameterError);
  CHECK_THROWS_AS(oscillator4(1.0, 0, 1), ParameterError);
}

TEST_CASE("oscillator4 commutation") {
  for (auto [n1, n2] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
    Model m = oscillator4(1.0, n1, n2);
    auto pts = points(4, 100);
    for (const auto& it : m.integrals) {
      double worst = 0.0;
      for (const auto& x : pts) worst = std::max(worst, residual(m, it.field, x));
      INFO("n = (" << n1 << "," << n2 << ") " << it.label);
      CHECK(worst <= (it.label == "T12" || it.label[0] == 'L' ? 1e-10 : 1e-9));
    }
  }
}

TEST_CASE("cross-block T13 is not conserved for n1 != n2") {
  const int n1 = 1, n2 = 2;
  Model m = oscillator4(1.0, n1, n2);
  const Field t13 = Field::p(0, 4) * Field::p(2, 4) +
                    (n1 * n2 * 1.0) * (Field::q(0, 4) * Field::q(2, 4));
  PhasePoint x({0.6, -0.8, 1.1, 0.4}, {0.9, 0.3, -0.5, 1.2});
  CHECK(residual(m, t13, x) > 1e-3);

  // independent oracle: dF/dt = {F, H} along the flow, central difference in
  // time via the momentum-flip reversal of the integrator
  auto flip = [](PhasePoint y) {
    for (double& v : y.p) v = -v;
    return y;
  };
  const double h = 1e-4;
  PhasePoint fwd = integrate_to(m, x, h, 1e-12);
  PhasePoint bwd = flip(integrate_to(m, flip(x), h, 1e-12));
  double fd = (t13(fwd) - t13(bwd)) / (2.0 * h);
  double pb = poisson_bracket(t13, m.hamiltonian, x);
  CHECK(std::abs(fd - pb) <= 1e-6 * (1.0 + std::abs(pb)));
}

TEST_CASE("resonance coupling chart values") {
  Model m = oscillator4(1.0, 3, 2);
  PhasePoint kin({0, 0, 0, 0}, {1, 0, 0, 0});
  auto c11 = jauch_hill(m, 1, 1);
  CHECK(std::abs(c11(kin) - std::complex<double>(1.0, 0.0)) <= 1e-15);

  for (int j = 1; j <= 4; ++j) {
    auto cjj = jauch_hill(m, j, j);
    for (const auto& x : points(4, 50)) {
      auto v = cjj(x);
      CHECK(std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v)));
      CHECK(v.real() >= 0.0);
    }
  }

  CHECK_THROWS_AS(jauch_hill(m, 0, 1), IndexError);
  CHECK_THROWS_AS(jauch_hill(m, 1, 5), IndexError);
  Model osc2 = oscillator2_reduced({});
  CHECK_THROWS_AS(jauch_hill(osc2, 1, 2), ParameterError);
}

TEST_CASE("angular momentum from the conjugate coupling") {
  const int n1 = 2;
  const double w = 0.7;
  Model m = oscillator4(w, n1, 3);
  ComplexField z1 = z_of(m, 1), z2 = z_of(m, 2);
  ComplexField diff = z1 * conj(z2) - z2 * conj(z1);  // purely imaginary
  // L12 = i/(2 n1 w) (z1 zbar2 - z2 zbar1)
  const Field& l12 = m.integral("L12").field;
  for (const auto& x : points(4, 100)) {
    double lhs = -diff.im(x) / (2.0 * n1 * w);
    CHECK(std::abs(diff.re(x)) <= 1e-12 * (1.0 + std::abs(lhs)));
    CHECK(std::abs(lhs - l12(x)) <= 1e-10 * (1.0 + std::abs(l12(x))));
  }
}

TEST_CASE("rotation-invariant basis") {
  Model m = oscillator4(1.0, 1, 2);
  auto basis = invariant_basis(m);
  const ComplexField& xi1 = basis[0];
  const ComplexField& eta1 = basis[1];
  const ComplexField& xi3 = basis[2];
  const ComplexField& eta2 = basis[3];

  PhasePoint two({0, 0, 0, 0}, {1, 1, 0, 0});
  CHECK(eta1(two) == std::complex<double>(2.0, 0.0));

  const Field& l12 = m.integral("L12").field;
  const Field& l34 = m.integral("L34").field;
  for (const auto& x : points(4, 100)) {
    for (const Field* f : {&xi1.re, &xi1.im, &eta1.re}) {
      CHECK(normalized_bracket_residual(l12, *f, x) <= 1e-10);
    }
    for (const Field* f : {&xi3.re, &xi3.im, &eta2.re}) {
      CHECK(normalized_bracket_residual(l34, *f, x) <= 1e-10);
    }
  }

  // E1 = eta1 / 2 and E1 + E2 = H
  auto inv = oscillator4_invariants(m);
  REQUIRE(inv.size() == 5);
  const ComplexField& e1 = inv[0].field;
  const ComplexField& e2 = inv[1].field;
  for (const auto& x : points(4, 100, 29)) {
    double hv = m.hamiltonian(x);
    CHECK(std::abs(e1.re(x) - 0.5 * eta1.re(x)) <= 1e-12 * (1.0 + std::abs(hv)));
    CHECK(std::abs(e1.re(x) + e2.re(x) - hv) <= 1e-12 * (1.0 + std::abs(hv)));
    CHECK(e1.im(x) == 0.0);
  }
}

TEST_CASE("invariant integral set commutes with H") {
  Model m = oscillator4(1.0, 2, 3);
  auto inv = oscillator4_invariants(m);
  for (const auto& x : points(4, 50, 31)) {
    for (const auto& lc : inv) {
      INFO(lc.label);
      CHECK(residual(m, lc.field.re, x) <= 1e-9);
      CHECK(residual(m, lc.field.im, x) <= 1e-9);
    }
  }
}

TEST_CASE("oscillator2 catalog values") {
  Model m = oscillator2_reduced({1.0, 1, 1, {0.0, 0.0}});
  PhasePoint rest({1.0, 1.0}, {0.0, 0.0});
  CHECK(m.integral("E1").field(rest) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.expected_rank == 3);
  CHECK_NOTHROW(m.integral("Rd"));

  Model m12 = oscillator2_reduced({1.0, 1, 2, {0.4, 0.0}});
  CHECK_NOTHROW(m12.integral("Re"));
  CHECK_THROWS_AS(m12.integral("Rd"), IndexError);
  Model m12k = oscillator2_reduced({1.0, 1, 2, {0.4, 0.9}});
  CHECK_THROWS_AS(m12k.integral("Re"), IndexError);

  CHECK_THROWS_AS(oscillator2_reduced({1.0, 1, 1, {-0.1, 0.0}}), ParameterError);

  // H = E1 + E2 identically
  for (const auto& x : points(2, 100)) {
    double hv = m12k.hamiltonian(x);
    double ev = m12k.integral("E1").field(x) + m12k.integral("E2").field(x);
    CHECK(std::abs(hv - ev) <= 1e-12 * (1.0 + std::abs(hv)));
  }
}

TEST_CASE("oscillator2 commutation") {
  std::vector<OscillatorParams> cases = {
      {1.0, 1, 1, {0.4, 0.9}},
      {1.0, 1, 2, {0.4, 0.9}},
      {1.0, 2, 3, {0.4, 0.9}},
      {1.0, 1, 2, {0.4, 0.0}},  // exposes Re
      {0.7, 1, 1, {0.2, 0.0}},
  };
  for (const auto& par : cases) {
    Model m = oscillator2_reduced(par);
    auto pts = points(2, 100);
    for (const auto& it : m.integrals) {
      double worst = 0.0;
      for (const auto& x : pts) worst = std::max(worst, residual(m, it.field, x));
      INFO(m.name << " n=(" << par.n1 << "," << par.n2 << ") " << it.label);
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("moduli are redundant with the energies") {
  const OscillatorParams par{1.1, 2, 3, {0.4, 0.9}};
  Model m = oscillator2_reduced(par);
  const double w2 = par.omega * par.omega;
  for (const auto& x : points(2, 100, 17)) {
    double e1 = m.integral("E1").field(x);
    double e2 = m.integral("E2").field(x);
    double i1 = m.integral("I1").field(x);
    double i2 = m.integral("I2").field(x);
    double r1 = 4.0 * (e1 * e1 - par.k[0] * par.n1 * par.n1 * w2);
    double r2 = 4.0 * (e2 * e2 - par.k[1] * par.n2 * par.n2 * w2);
    CHECK(std::abs(i1 - r1) <= 1e-10 * (1.0 + std::abs(i1)));
    CHECK(std::abs(i2 - r2) <= 1e-10 * (1.0 + std::abs(i2)));
  }
}

TEST_CASE("resonance identity for n = (1,1)") {
  const OscillatorParams par{1.1, 1, 1, {0.5, 0.8}};
  Model m = oscillator2_reduced(par);
  const double w2 = par.omega * par.omega;
  for (const auto& x : points(2, 100, 19)) {
    double e1 = m.integral("E1").field(x);
    double e2 = m.integral("E2").field(x);
    double q = m.integral("Q").field(x);
    double rd = m.integral("Rd").field(x);
    double lhs = (4.0 * e1 * e2 - q) / (2.0 * w2);
    CHECK(std::abs(lhs - rd) <= 1e-9 * (1.0 + std::abs(rd)));
  }
}

TEST_CASE("resonance identity for n = (1,2), k2 = 0") {
  const OscillatorParams par{0.9, 1, 2, {0.7, 0.0}};
  Model m = oscillator2_reduced(par);
  const double w2 = par.omega * par.omega;
  for (const auto& x : points(2, 100, 23)) {
    double e1 = m.integral("E1").field(x);
    double e2 = m.integral("E2").field(x);
    double q = m.integral("Q").field(x);
    double re = m.integral("Re").field(x);
    double lhs = (8.0 * e1 * e1 * e2 - q) / (8.0 * w2) - par.k[0] * e2;
    CHECK(std::abs(lhs - re * re) <= 1e-8 * (1.0 + std::abs(re * re)));
  }
}

TEST_CASE("modulus of the resonance invariant") {
  const OscillatorParams par{1.0, 1, 2, {0.4, 0.9}};
  Model m = oscillator2_reduced(par);
  ComplexField q1 = oscillator2_q1(m);
  for (const auto& x : points(2, 100, 27)) {
    // declared Q, ImQ1 are the components of q1
    CHECK(m.integral("Q").field(x) == q1.re(x));
    CHECK(m.integral("ImQ1").field(x) == q1.im(x));
    // |Q1|^2 = I1^{n2} I2^{n1}
    double q = q1.re(x), qi = q1.im(x);
    double i1 = m.integral("I1").field(x);
    double i2 = m.integral("I2").field(x);
    double rhs = std::pow(i1, par.n2) * std::pow(i2, par.n1);
    CHECK(std::abs(q * q + qi * qi - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("declared momentum orders match the scaling slope") {
  for (const auto& [model, pt] :
       {std::pair{oscillator4(1.0, 1, 2), kOrderPoint4},
        std::pair{oscillator4(1.0, 2, 3), kOrderPoint4},
        std::pair{oscillator2_reduced({1.0, 1, 1, {0.4, 0.9}}), kOrderPoint2},
        std::pair{oscillator2_reduced({1.0, 1, 2, {0.4, 0.9}}), kOrderPoint2},
        std::pair{oscillator2_reduced({1.0, 2, 3, {0.4, 0.9}}), kOrderPoint2}}) {
    for (const auto& it : model.integrals) {
      INFO(model.name << " " << it.label);
      CHECK(momentum_slope(it.field, pt) == doctest::Approx(it.order).epsilon(0.01));
    }
  }
}

TEST_CASE("model registry") {
  CHECK(model_names() ==
        std::vector<std::string>{"coulomb6", "coulomb3", "oscillator4", "oscillator2"});
  Model m = model_by_name("oscillator2", {});
  CHECK(m.params.at("n2") == 2.0);
  CHECK(m.params.at("k1") == 0.4);
  Model c = model_by_name("coulomb3", {{"k3", 0.0}});
  CHECK_NOTHROW(c.integral("D"));
  CHECK_THROWS_AS(model_by_name("nope"), IndexError);
  CHECK_THROWS_AS(model_by_name("coulomb6", {{"k1", 0.3}}), ParameterError);
  CHECK_THROWS_AS(model_by_name("oscillator4", {{"n1", 1.5}}), ParameterError);
}

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "superint/bracket.hpp"
#include "superint/dynamics.hpp"
#include "superint/models.hpp"
#include "superint/reduction.hpp"
#include "superint/sampling.hpp"
#include "superint/verifier.hpp"

// Acceptance suite: one verdict line per criterion, exit code = number of
// failed criteria. Criterion 2 carries one expected failure, printed as
// [XFAIL] with the measured rank and the identity that causes it; it is a
// property of the integral set, not of this implementation, so it does not
// count toward the exit code.

using namespace superint;

namespace {

int g_failures = 0;

void verdict(int number, bool ok, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, text.c_str());
  if (!ok) ++g_failures;
}

std::vector<PhasePoint> points(int n, int count, uint64_t seed = 42) {
  SampleSpec spec;
  spec.count = count;
  spec.seed = seed;
  return sample_points(spec, n);
}

double scaled_gap(double value, double reference) {
  return std::abs(value - reference) / (1.0 + std::abs(reference));
}

// ---------------------------------------------------------------------------
// 1. Commutation: max normalized |{H,I}| over 1000 points <= 1e-9 for every
//    declared integral of every catalog model at the generic parameters.

void criterion1() {
  std::printf("-- criterion 1: commutation of every declared integral "
              "(1000 points, tol 1e-09)\n");
  struct Config {
    Model model;
    std::string desc;
  };
  std::vector<Config> configs;
  configs.push_back({coulomb6(1.0), "gamma=1"});
  configs.push_back({coulomb3_reduced({1.0, {0.3, 0.5, 0.7}}),
                     "gamma=1 k=(0.3,0.5,0.7)"});
  for (auto [n1, n2] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    configs.push_back({oscillator4(1.0, n1, n2),
                       "omega=1 n=(" + std::to_string(n1) + "," + std::to_string(n2) + ")"});
    configs.push_back({oscillator2_reduced({1.0, n1, n2, {0.4, 0.9}}),
                       "omega=1 n=(" + std::to_string(n1) + "," + std::to_string(n2) +
                           ") k=(0.4,0.9)"});
  }
  const double tol = 1e-9;
  bool ok = true;
  SampleSpec spec;  // 1000 points, seed 42
  for (const auto& cfg : configs) {
    double worst = -1.0;
    std::string worst_label;
    for (const auto& res : check_commutation(cfg.model, spec)) {
      if (res.max_residual > worst) {
        worst = res.max_residual;
        worst_label = res.label;
      }
      if (res.max_residual > tol) ok = false;
    }
    std::printf("   %-12s %-28s worst {H,%s} = %.3e\n", cfg.model.name.c_str(),
                cfg.desc.c_str(), worst_label.c_str(), worst);
  }
  verdict(1, ok, "max normalized |{H,I}| <= 1e-09 across 8 parameter sets");
}

// ---------------------------------------------------------------------------
// 2. Functional independence ranks at >= 95% of 100 random points.

void criterion2() {
  std::printf("-- criterion 2: functional independence ranks "
              "(100 points, >= 95%% required)\n");
  const int count = 100;
  const int need = 95;

  Model cou = coulomb3_reduced({1.0, {0.3, 0.5, 0.7}});
  auto fields_of = [](const Model& m, const std::vector<std::string>& labels,
                      bool with_h) {
    std::vector<Field> out;
    if (with_h) out.push_back(m.hamiltonian);
    for (const auto& l : labels) out.push_back(m.integral(l).field);
    return out;
  };
  auto hits_at = [](const std::vector<Field>& fields,
                    const std::vector<PhasePoint>& pts, int rank) {
    int hits = 0;
    for (const auto& x : pts)
      if (independence_rank(fields, x) == rank) ++hits;
    return hits;
  };

  auto pts3 = points(3, count);
  auto literal = fields_of(cou, {"I1", "I2", "I3", "T"}, true);
  const int literal5 = hits_at(literal, pts3, 5);
  const int literal4 = hits_at(literal, pts3, 4);
  const bool literal_ok = literal5 >= need;
  std::printf("   coulomb3 literal {H,I1,I2,I3,T}: rank 5 at %d/%d, rank 4 at %d/%d\n",
              literal5, count, literal4, count);
  if (!literal_ok)
    std::printf(
        "[XFAIL] criterion 2: the literal set is functionally dependent: "
        "T = 2H(I1+I2+I3+2(k1+k2+k3)) + gamma^2\n"
        "        holds identically, so its rank is 4; swapping T for any "
        "single T_i restores rank 5 (checked below)\n");

  bool ok = true;
  for (const char* ti : {"T1", "T2", "T3"}) {
    const int hits = hits_at(fields_of(cou, {"I1", "I2", "I3", ti}, true), pts3, 5);
    std::printf("   coulomb3 {H,I1,I2,I3,%s}: rank 5 at %d/%d\n", ti, hits, count);
    ok = ok && hits >= need;
  }
  {
    std::vector<Field> whole{cou.hamiltonian};
    for (const auto& it : cou.integrals) whole.push_back(it.field);
    const int hits = hits_at(whole, pts3, 5);
    std::printf("   coulomb3 whole declared set (%zu fields): rank 5 at %d/%d\n",
                whole.size(), hits, count);
    ok = ok && hits >= need;
  }

  Model osc2 = oscillator2_reduced({1.0, 1, 2, {0.4, 0.9}});
  {
    const int hits =
        hits_at(fields_of(osc2, {"E1", "E2", "Q"}, false), points(2, count), 3);
    std::printf("   oscillator2 {E1,E2,Q}: rank 3 at %d/%d\n", hits, count);
    ok = ok && hits >= need;
  }

  Model osc4 = oscillator4(1.0, 1, 2);
  {
    std::vector<Field> invset;
    for (const auto& lc : oscillator4_invariants(osc4)) {
      invset.push_back(lc.field.re);
      if (lc.label == "Q1") invset.push_back(lc.field.im);
    }
    const int hits = hits_at(invset, points(4, count), 5);
    std::printf("   oscillator4 redundant set {E1,E2,ReQ1,ImQ1,I1,I2}: rank 5 at %d/%d\n",
                hits, count);
    ok = ok && hits >= need;
  }

  std::string text =
      "coulomb3 repaired sets rank 5, oscillator2 rank 3, oscillator4 "
      "redundant set rank 5";
  if (literal_ok)
    text += "; literal coulomb3 set rank 5";
  else
    text += "; literal coulomb3 set rank 4 (expected failure above)";
  verdict(2, ok, text);
}

// ---------------------------------------------------------------------------
// 3. Reduction consistency: pullback residuals and the momentum map.

void criterion3() {
  std::printf("-- criterion 3: reduction pullback and momentum map "
              "(1000 reduced points x 4 angle draws)\n");
  SampleSpec spec;  // 1000 points
  bool ok = true;

  auto show = [&](const ReductionSuiteResult& suite, const std::string& desc) {
    std::printf("   %s (%s): ", suite.family.c_str(), desc.c_str());
    for (const auto& e : suite.entries) {
      const double worst = std::max(e.report.max_mismatch, e.report.max_angle_spread);
      std::printf("%s %.1e  ", e.label.c_str(), worst);
      ok = ok && e.report.pass;
    }
    std::printf("mmap %.1e\n", suite.momentum_map_error);
    ok = ok && suite.pass;
  };
  show(run_reduction_suite("coulomb", {}, spec), "gamma=1 k=(0.3,0.5,0.7)");
  show(run_reduction_suite("oscillator",
                           {{"n1", 1}, {"n2", 2}, {"k1", 0.4}, {"k2", 0.9}}, spec),
       "n=(1,2) k=(0.4,0.9)");
  show(run_reduction_suite("oscillator",
                           {{"n1", 2}, {"n2", 3}, {"k1", 0.4}, {"k2", 0.9}}, spec),
       "n=(2,3) k=(0.4,0.9)");

  // Spot check of the pinned momentum-map values at a lifted point.
  const std::array<double, 3> kc{0.3, 0.5, 0.7};
  ReductionMap cmap = ReductionMap::coulomb(kc);
  PhasePoint red3({0.9, 1.1, 0.7}, {0.2, -0.4, 0.6});
  std::vector<double> ang3{0.3, -1.2, 2.1};
  auto mm3 = cmap.momentum_map(cmap.lift(red3, ang3));
  double mmerr = 0.0;
  for (int i = 0; i < 3; ++i)
    mmerr = std::max(mmerr, std::abs(mm3[i] - std::sqrt(2.0 * kc[i])));
  const std::array<double, 2> ko{0.4, 0.9};
  ReductionMap omap = ReductionMap::oscillator(ko);
  PhasePoint red2({0.8, 1.2}, {0.5, -0.3});
  std::vector<double> ang2{1.0, -0.7};
  auto mm2 = omap.momentum_map(omap.lift(red2, ang2));
  for (int i = 0; i < 2; ++i)
    mmerr = std::max(mmerr, std::abs(mm2[i] - std::sqrt(ko[i])));
  std::printf("   momentum map vs (sqrt(2k_i) | sqrt(k_i)) at lifted points: %.3e\n", mmerr);
  ok = ok && mmerr <= 1e-12;

  verdict(3, ok,
          "pullbacks <= 1e-10 (H, I1-I3, E1, E2, Q1, I1, I2), <= 1e-08 (T, T_i); "
          "momentum map pinned to 1e-12");
}

// ---------------------------------------------------------------------------
// 4. Moduli redundancy: I_i = 4(E_i^2 - k_i n_i^2 w^2) at 1000 points.

void criterion4() {
  std::printf("-- criterion 4: moduli redundancy identities (1000 points, tol 1e-10)\n");
  bool ok = true;
  for (auto [n1, n2] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    const OscillatorParams par{1.0, n1, n2, {0.4, 0.9}};
    const double w2 = par.omega * par.omega;
    Model m = oscillator2_reduced(par);
    double worst = 0.0;
    for (const auto& x : points(2, 1000)) {
      const double e1 = m.integral("E1").field(x);
      const double e2 = m.integral("E2").field(x);
      const double i1 = m.integral("I1").field(x);
      const double i2 = m.integral("I2").field(x);
      worst = std::max(worst, scaled_gap(i1, 4.0 * (e1 * e1 - par.k[0] * n1 * n1 * w2)));
      worst = std::max(worst, scaled_gap(i2, 4.0 * (e2 * e2 - par.k[1] * n2 * n2 * w2)));
    }
    std::printf("   n=(%d,%d): worst residual %.3e\n", n1, n2, worst);
    ok = ok && worst <= 1e-10;
  }
  verdict(4, ok, "I1 = 4(E1^2 - k1 n1^2 w^2) and I2 analog within 1e-10");
}

// ---------------------------------------------------------------------------
// 5. Special-case identities tying Q to the rotation / parabolic integrals.

void criterion5() {
  std::printf("-- criterion 5: special-case identities (1000 points each)\n");
  bool ok = true;
  {
    const OscillatorParams par{1.0, 1, 1, {0.4, 0.9}};
    const double w2 = par.omega * par.omega;
    Model m = oscillator2_reduced(par);
    double worst = 0.0;
    for (const auto& x : points(2, 1000)) {
      const double lhs = (4.0 * m.integral("E1").field(x) * m.integral("E2").field(x) -
                          m.integral("Q").field(x)) /
                         (2.0 * w2);
      worst = std::max(worst, scaled_gap(lhs, m.integral("Rd").field(x)));
    }
    std::printf("   n=(1,1): (4 E1 E2 - Q)/(2 w^2) vs Rd, worst %.3e (tol 1e-09)\n", worst);
    ok = ok && worst <= 1e-9;
  }
  {
    const OscillatorParams par{1.0, 1, 2, {0.4, 0.0}};
    const double w2 = par.omega * par.omega;
    Model m = oscillator2_reduced(par);
    double worst = 0.0;
    for (const auto& x : points(2, 1000)) {
      const double e1 = m.integral("E1").field(x);
      const double e2 = m.integral("E2").field(x);
      const double lhs =
          (8.0 * e1 * e1 * e2 - m.integral("Q").field(x)) / (8.0 * w2) - par.k[0] * e2;
      const double re = m.integral("Re").field(x);
      worst = std::max(worst, scaled_gap(lhs, re * re));
    }
    std::printf("   n=(1,2) k2=0: (8 E1^2 E2 - Q)/(8 w^2) - k1 E2 vs Re^2, "
                "worst %.3e (tol 1e-08)\n", worst);
    ok = ok && worst <= 1e-8;
  }
  verdict(5, ok, "rotation identity within 1e-09, parabolic identity within 1e-08");
}

// ---------------------------------------------------------------------------
// 6. Bracket-engine cross-check: z-chart vs canonical at 100 points.

void criterion6() {
  std::printf("-- criterion 6: z-chart bracket vs canonical bracket "
              "(100 points, tol 1e-10)\n");
  bool ok = true;
  for (auto [n1, n2] : {std::pair{1, 2}, {2, 3}}) {
    Model m = oscillator4(1.0, n1, n2);
    Weights w = Weights::from_pairs({n1, n2}, 1.0);
    ComplexField c13 = jauch_hill(m, 1, 3);
    auto basis = invariant_basis(m);
    double worst = 0.0;
    for (const auto& x : points(4, 100)) {
      for (const auto& [f, g] : {std::pair{c13, basis[0]},
                                 {basis[0], basis[1]},
                                 {c13, basis[1]},
                                 {basis[2], basis[3]}}) {
        const auto zb = z_bracket(f, g, x, w);
        const auto pb = poisson_bracket(f, g, x);
        worst = std::max(worst, std::abs(zb - pb) / (1.0 + std::abs(pb)));
      }
    }
    std::printf("   n=(%d,%d): worst |z_bracket - canonical| %.3e\n", n1, n2, worst);
    ok = ok && worst <= 1e-10;
  }
  verdict(6, ok, "both bracket routes agree within 1e-10");
}

// ---------------------------------------------------------------------------
// 7. Momentum orders by log-slope fit under p -> lambda p.

void criterion7() {
  std::printf("-- criterion 7: momentum-order slopes (fit between lambda = 1e3 and 1e7)\n");
  const PhasePoint pt({0.7, -1.1}, {0.8, 0.5});
  auto slope = [&](const Field& f) {
    auto at = [&](double lam) {
      std::vector<double> p = pt.p;
      for (double& v : p) v *= lam;
      return std::abs(f(PhasePoint(pt.q, p)));
    };
    return std::log(at(1e7) / at(1e3)) / std::log(1e4);
  };
  bool ok = true;
  for (auto [n1, n2] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    Model m = oscillator2_reduced({1.0, n1, n2, {0.4, 0.9}});
    const double s1 = slope(m.integral("E1").field);
    const double s2 = slope(m.integral("E2").field);
    const double sq = slope(m.integral("Q").field);
    std::printf("   n=(%d,%d): E1 %.4f  E2 %.4f  Q %.4f (expect 2, 2, %d)\n", n1, n2,
                s1, s2, sq, 2 * (n1 + n2));
    ok = ok && std::abs(s1 - 2.0) <= 0.01 && std::abs(s2 - 2.0) <= 0.01 &&
         std::abs(sq - 2.0 * (n1 + n2)) <= 0.01;
  }
  verdict(7, ok, "orders 2, 2, 2(n1+n2) confirmed within 0.01");
}

// ---------------------------------------------------------------------------
// 8. Dynamics: closed orbits and conservation along them.

void criterion8() {
  std::printf("-- criterion 8: closed orbits and drift (rel_tol 1e-10)\n");
  const double two_pi = 2.0 * std::numbers::pi;
  bool ok = true;

  auto drift_along = [&](const Model& m, const PhasePoint& x0, double t_end) {
    Trajectory traj = integrate_adaptive(m, x0, t_end, 1e-10);
    auto ints = m.integrals;
    ints.push_back({"H", m.hamiltonian, 2});
    double worst = 0.0;
    std::string worst_label;
    for (const auto& d : conservation_drift(traj, ints))
      if (d.max_drift > worst) {
        worst = d.max_drift;
        worst_label = d.label;
      }
    std::printf("     drift along [0, %.4g]: worst %.3e (%s)\n", t_end, worst,
                worst_label.c_str());
    return worst <= 1e-6;
  };

  // Closed orbits of the caged oscillator at k = (0,0). A nonzero barrier
  // k_i halves that coordinate's recurrence to pi/(n_i w), so t* = 2 pi / w
  // pins the barrier-free cage.
  const PhasePoint y0({1.3, 0.7}, {0.3, -0.2});
  for (auto [n1, n2] : {std::pair{1, 2}, {2, 3}}) {
    Model m = oscillator2_reduced({1.0, n1, n2, {0.0, 0.0}});
    auto t = orbit_closure(m, y0, 10.0, 1e-5);
    if (t) {
      std::printf("   oscillator2 n=(%d,%d) k=(0,0): t* = %.12g (|t* - 2pi| = %.2e)\n",
                  n1, n2, *t, std::abs(*t - two_pi));
      ok = ok && std::abs(*t - two_pi) <= 1e-5;
    } else {
      std::printf("   oscillator2 n=(%d,%d): no closure found\n", n1, n2);
      ok = false;
    }
    ok = drift_along(m, y0, two_pi) && ok;
  }

  Model cou = coulomb3_reduced({1.0, {0.02, 0.03, 0.04}});
  const PhasePoint c0({1.1, 0.9, 1.0}, {0.1, -0.1, 0.1});
  const double h0 = cou.hamiltonian(c0);
  auto t = orbit_closure(cou, c0, 200.0, 1e-4);
  if (t) {
    const double kepler = two_pi / std::pow(-2.0 * h0, 1.5);
    std::printf("   coulomb3 bound orbit (H = %.6f): recurs at t* = %.12g "
                "(energy-period law predicts %.12g)\n", h0, *t, kepler);
  } else {
    std::printf("   coulomb3 bound orbit (H = %.6f): no recurrence before t = 200\n", h0);
    ok = false;
  }
  ok = drift_along(cou, c0, t ? *t : 200.0) && ok;

  verdict(8, ok,
          "t* = 2pi/w within 1e-05 for n=(1,2),(2,3); bound Coulomb orbit recurs "
          "(match_tol 1e-04); all declared integrals drift <= 1e-06");
}

// ---------------------------------------------------------------------------
// 9. Negative controls.

void criterion9() {
  std::printf("-- criterion 9: negative controls\n");
  bool ok = true;

  Model osc = oscillator2_reduced({1.0, 1, 2, {0.4, 0.9}});
  osc.integrals[0].field = osc.integrals[0].field + Field::q(0, 2);
  SampleSpec spec;
  spec.count = 100;
  const auto res = check_commutation(osc, spec);
  std::printf("   corrupted E1 + x1: residual %.3e (must exceed 1e-09)\n",
              res[0].max_residual);
  ok = ok && res[0].max_residual > 1e-9;

  Model cou = coulomb3_reduced({1.0, {0.3, 0.5, 0.7}});
  const PhasePoint x = sample_one(spec, 3, 0);
  const int dup = independence_rank({cou.hamiltonian, cou.hamiltonian}, x);
  std::printf("   duplicated-gradient set {H,H}: rank %d (must be 1)\n", dup);
  ok = ok && dup == 1;

  Model cage = oscillator2_reduced({1.0, 1, 2, {0.0, 0.0}});
  const PhasePoint y0({1.0, 1.2}, {0.4, -0.3});
  const std::vector<Integral> hmon{{"H", cage.hamiltonian, 2}};
  const auto dv =
      conservation_drift(integrate_verlet(cage, y0, 100.0, 1e-3, 100), hmon);
  const auto de =
      conservation_drift(integrate_euler(cage, y0, 100.0, 1e-3, 100), hmon);
  std::printf("   energy drift over t = 100, dt = 1e-3: leapfrog %.3e, "
              "euler %.3e (ratio %.1f)\n",
              dv[0].max_drift, de[0].max_drift, de[0].max_drift / dv[0].max_drift);
  ok = ok && dv[0].max_drift <= 1e-5 && de[0].max_drift > 100.0 * dv[0].max_drift;

  verdict(9, ok,
          "corrupted integral detected, duplicate gradients rank 1, Euler "
          "drifts secularly where leapfrog does not");
}

}  // namespace

int main() {
  std::printf("superintegrability acceptance suite\n\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("\nsummary: %d of 9 criteria passed", 9 - g_failures);
  if (g_failures == 0)
    std::printf(" (one expected failure inside criterion 2, see [XFAIL])");
  std::printf("\n");
  return g_failures;
}

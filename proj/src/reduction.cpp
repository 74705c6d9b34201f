#include "superint/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "superint/errors.hpp"
#include "superint/models.hpp"
#include "superint/rng.hpp"

namespace superint {

ReductionMap::ReductionMap(Convention c, std::vector<double> k)
    : convention_(c), k_(std::move(k)) {
  for (double v : k_)
    if (!(v >= 0.0)) throw ParameterError("ReductionMap: barriers need k_i >= 0");
}

ReductionMap ReductionMap::coulomb(const std::array<double, 3>& k) {
  return ReductionMap(Convention::coulomb, {k.begin(), k.end()});
}

ReductionMap ReductionMap::oscillator(const std::array<double, 2>& k) {
  return ReductionMap(Convention::oscillator, {k.begin(), k.end()});
}

double ReductionMap::cyclic_momentum(int i) const {
  if (i < 0 || i >= pairs()) throw IndexError("cyclic_momentum: pair index out of range");
  return convention_ == Convention::coulomb ? std::sqrt(2.0 * k_[i])
                                            : std::sqrt(k_[i]);
}

ReductionMap::Projection ReductionMap::project(const PhasePoint& full) const {
  if (full.dim() != full_half_dim())
    throw DimensionError("project: point does not match the full space");
  const int m = pairs();
  std::vector<double> radii(m), prad(m), angles(m), ell(m);
  for (int i = 0; i < m; ++i) {
    const double xa = full.q[2 * i], xb = full.q[2 * i + 1];
    const double pa = full.p[2 * i], pb = full.p[2 * i + 1];
    const double r = std::hypot(xa, xb);
    if (r < eps_domain)
      throw DomainError("project: pair radius within eps_domain of zero");
    radii[i] = r;
    angles[i] = std::atan2(xb, xa);
    prad[i] = (xa * pa + xb * pb) / r;
    ell[i] = xa * pb - xb * pa;
  }
  return {PhasePoint(std::move(radii), std::move(prad)), std::move(angles),
          std::move(ell)};
}

PhasePoint ReductionMap::lift(const PhasePoint& reduced,
                              std::span<const double> angles) const {
  const int m = pairs();
  if (reduced.dim() != m)
    throw DimensionError("lift: point does not match the reduced space");
  if (static_cast<int>(angles.size()) != m)
    throw DimensionError("lift: need one angle per coordinate pair");
  std::vector<double> q(2 * m), p(2 * m);
  for (int i = 0; i < m; ++i) {
    const double x = reduced.q[i];
    if (x < eps_domain)
      throw DomainError("lift: radius must be positive");
    const double c = std::cos(angles[i]), s = std::sin(angles[i]);
    const double ell = cyclic_momentum(i);
    const double pr = reduced.p[i];
    q[2 * i] = x * c;
    q[2 * i + 1] = x * s;
    p[2 * i] = -ell * s / x + pr * c;
    p[2 * i + 1] = ell * c / x + pr * s;
  }
  return PhasePoint(std::move(q), std::move(p));
}

std::vector<double> ReductionMap::momentum_map(const PhasePoint& full) const {
  if (full.dim() != full_half_dim())
    throw DimensionError("momentum_map: point does not match the full space");
  const int m = pairs();
  std::vector<double> ell(m);
  for (int i = 0; i < m; ++i)
    ell[i] = full.q[2 * i] * full.p[2 * i + 1] - full.q[2 * i + 1] * full.p[2 * i];
  return ell;
}

ChartFields multipolar_chart(int pairs) {
  if (pairs < 1) throw DimensionError("multipolar_chart: need at least one pair");
  const int n = 2 * pairs;  // chart half dimension
  ChartFields out;
  out.qsub.resize(n);
  out.psub.resize(n);
  for (int i = 0; i < pairs; ++i) {
    const Field x = Field::q(i, n);
    const Field th = Field::q(pairs + i, n);
    const Field pr = Field::p(i, n);
    const Field ell = Field::p(pairs + i, n);
    out.qsub[2 * i] = x * cos(th);
    out.qsub[2 * i + 1] = x * sin(th);
    out.psub[2 * i] = -ell * sin(th) / x + pr * cos(th);
    out.psub[2 * i + 1] = ell * cos(th) / x + pr * sin(th);
  }
  return out;
}

namespace {

SampleSpec reduced_spec(const ReductionMap& map, const SampleSpec& spec) {
  SampleSpec s = spec;
  if (s.box.empty()) {
    const int m = map.reduced_half_dim();
    s.box.assign(2 * m, {-2.0, 2.0});
    for (int i = 0; i < m; ++i) s.box[i] = {0.3, 2.0};
  } else {
    for (int i = 0; i < map.reduced_half_dim(); ++i)
      if (!(s.box[i].first > 0.0))
        throw ParameterError("pullback_check: radii box must be positive");
  }
  return s;
}

}  // namespace

PullbackReport pullback_check(const ReductionMap& map, const Field& full_field,
                              const Field& reduced_field, const SampleSpec& spec,
                              double tol) {
  const SampleSpec s = reduced_spec(map, spec);
  const int m = map.reduced_half_dim();
  PullbackReport report;
  report.samples = s.count;
  constexpr int angle_draws = 4;
  for (int idx = 0; idx < s.count; ++idx) {
    const PhasePoint red = sample_one(s, m, idx);
    const double rv = reduced_field(red);
    // Angles come from a stream keyed off the same seed but separated from
    // the coordinate draws.
    Xoshiro256pp arng(substream_seed(s.seed ^ 0x5851F42D4C957F2DULL, idx));
    const double denom = 1.0 + std::abs(rv);
    double vmin = 0.0, vmax = 0.0;
    for (int a = 0; a < angle_draws; ++a) {
      std::vector<double> angles(m);
      for (double& th : angles) th = arng.uniform(-M_PI, M_PI);
      const double fv = full_field(map.lift(red, angles));
      if (a == 0) {
        vmin = vmax = fv;
      } else {
        vmin = std::min(vmin, fv);
        vmax = std::max(vmax, fv);
      }
      report.max_mismatch = std::max(report.max_mismatch, std::abs(fv - rv) / denom);
    }
    report.max_angle_spread = std::max(report.max_angle_spread, (vmax - vmin) / denom);
  }
  report.pass = report.max_mismatch <= tol && report.max_angle_spread <= tol;
  return report;
}

PullbackReport pullback_check(const ReductionMap& map,
                              const ComplexField& full_field,
                              const ComplexField& reduced_field,
                              const SampleSpec& spec, double tol) {
  const PullbackReport re = pullback_check(map, full_field.re, reduced_field.re, spec, tol);
  const PullbackReport im = pullback_check(map, full_field.im, reduced_field.im, spec, tol);
  PullbackReport out;
  out.samples = re.samples;
  out.max_mismatch = std::max(re.max_mismatch, im.max_mismatch);
  out.max_angle_spread = std::max(re.max_angle_spread, im.max_angle_spread);
  out.pass = re.pass && im.pass;
  return out;
}

namespace {

double momentum_map_error(const ReductionMap& map, const SampleSpec& spec) {
  const SampleSpec s = reduced_spec(map, spec);
  const int m = map.reduced_half_dim();
  double worst = 0.0;
  const int count = std::min(s.count, 200);
  for (int idx = 0; idx < count; ++idx) {
    const PhasePoint red = sample_one(s, m, idx);
    Xoshiro256pp arng(substream_seed(s.seed ^ 0x5851F42D4C957F2DULL, idx));
    std::vector<double> angles(m);
    for (double& th : angles) th = arng.uniform(-M_PI, M_PI);
    const auto ell = map.momentum_map(map.lift(red, angles));
    for (int i = 0; i < m; ++i)
      worst = std::max(worst, std::abs(ell[i] - map.cyclic_momentum(i)));
  }
  return worst;
}

Field sum_of_squares(const Model& model, const std::vector<std::string>& labels) {
  Field acc = Field::constant(0.0);
  for (const auto& label : labels) acc = acc + pow(model.integral(label).field, 2);
  return acc;
}

}  // namespace

ReductionSuiteResult run_reduction_suite(
    const std::string& family,
    const std::map<std::string, double>& overrides, const SampleSpec& spec) {
  ReductionSuiteResult result;
  result.family = family;
  if (family == "coulomb") {
    const Model red = model_by_name("coulomb3", overrides);
    std::map<std::string, double> full_over;
    full_over["gamma"] = red.params.at("gamma");
    const Model full = model_by_name("coulomb6", full_over);
    const ReductionMap map = ReductionMap::coulomb(
        {red.params.at("k1"), red.params.at("k2"), red.params.at("k3")});

    result.entries.push_back(
        {"H", 1e-12, pullback_check(map, full.hamiltonian, red.hamiltonian, spec, 1e-12)});
    const std::vector<std::pair<std::string, std::vector<std::string>>> rot{
        {"I1", {"L13", "L14", "L23", "L24"}},
        {"I2", {"L15", "L16", "L25", "L26"}},
        {"I3", {"L35", "L36", "L45", "L46"}}};
    for (const auto& [label, parts] : rot)
      result.entries.push_back(
          {label, 1e-10,
           pullback_check(map, sum_of_squares(full, parts), red.integral(label).field,
                          spec, 1e-10)});
    const std::vector<std::pair<std::string, std::vector<std::string>>> lrl{
        {"T1", {"A1", "A2"}}, {"T2", {"A3", "A4"}}, {"T3", {"A5", "A6"}},
        {"T", {"A1", "A2", "A3", "A4", "A5", "A6"}}};
    for (const auto& [label, parts] : lrl)
      result.entries.push_back(
          {label, 1e-8,
           pullback_check(map, sum_of_squares(full, parts), red.integral(label).field,
                          spec, 1e-8)});
    result.momentum_map_error = momentum_map_error(map, spec);
  } else if (family == "oscillator") {
    const Model red = model_by_name("oscillator2", overrides);
    std::map<std::string, double> full_over;
    for (const char* key : {"omega", "n1", "n2"}) full_over[key] = red.params.at(key);
    const Model full = model_by_name("oscillator4", full_over);
    const ReductionMap map =
        ReductionMap::oscillator({red.params.at("k1"), red.params.at("k2")});

    result.entries.push_back(
        {"H", 1e-12, pullback_check(map, full.hamiltonian, red.hamiltonian, spec, 1e-12)});
    const auto inv = oscillator4_invariants(full);
    auto full_inv = [&](const std::string& label) -> const ComplexField& {
      for (const auto& lc : inv)
        if (lc.label == label) return lc.field;
      throw IndexError("missing invariant " + label);
    };
    result.entries.push_back(
        {"E1", 1e-10,
         pullback_check(map, full_inv("E1").re, red.integral("E1").field, spec, 1e-10)});
    result.entries.push_back(
        {"E2", 1e-10,
         pullback_check(map, full_inv("E2").re, red.integral("E2").field, spec, 1e-10)});
    result.entries.push_back(
        {"Q1", 1e-10,
         pullback_check(map, full_inv("Q1"), oscillator2_q1(red), spec, 1e-10)});
    result.entries.push_back(
        {"I1", 1e-10,
         pullback_check(map, full_inv("I1").re, red.integral("I1").field, spec, 1e-10)});
    result.entries.push_back(
        {"I2", 1e-10,
         pullback_check(map, full_inv("I2").re, red.integral("I2").field, spec, 1e-10)});
    result.momentum_map_error = momentum_map_error(map, spec);
  } else {
    throw IndexError("unknown reduction family " + family);
  }
  result.pass = result.momentum_map_error <= result.momentum_map_tol;
  for (const auto& entry : result.entries) result.pass = result.pass && entry.report.pass;
  return result;
}

}  // namespace superint

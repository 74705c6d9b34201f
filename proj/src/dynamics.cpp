#include "superint/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "superint/bracket.hpp"

namespace superint {

namespace {

// dV/dq via forward passes over the position directions only.
std::vector<double> potential_gradient(const Model& model, const std::vector<double>& q) {
  const int n = static_cast<int>(q.size());
  std::vector<Dual> qd(n), pd(n);
  for (int i = 0; i < n; ++i) qd[i] = Dual(q[i]);
  std::vector<double> g(n);
  for (int d = 0; d < n; ++d) {
    qd[d].dot = 1.0;
    g[d] = model.potential.eval_raw(qd.data(), pd.data()).dot;
    qd[d].dot = 0.0;
  }
  return g;
}

std::vector<double> packed(const PhasePoint& x) {
  std::vector<double> y(2 * x.dim());
  std::copy(x.q.begin(), x.q.end(), y.begin());
  std::copy(x.p.begin(), x.p.end(), y.begin() + x.dim());
  return y;
}

PhasePoint unpacked(const std::vector<double>& y) {
  const int n = static_cast<int>(y.size() / 2);
  return PhasePoint({y.begin(), y.begin() + n}, {y.begin() + n, y.end()});
}

std::vector<double> rhs_packed(const Model& model, const std::vector<double>& y) {
  const int n = static_cast<int>(y.size() / 2);
  const PhasePoint x = unpacked(y);
  const auto g = gradient(model.hamiltonian, x);
  std::vector<double> f(2 * n);
  for (int i = 0; i < n; ++i) {
    f[i] = g[n + i];
    f[n + i] = -g[i];
  }
  return f;
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200, e6 = 11.0 / 84 - 187.0 / 2100,
                 e7 = -1.0 / 40;

// Integrate forward over [0, t_span]; calls recorder(t, y) after every
// accepted step. Returns the final packed state.
std::vector<double> rk45_core(const Model& model, std::vector<double> y,
                              double t_span, double rel_tol, double abs_tol,
                              const std::function<void(double, const std::vector<double>&)>& recorder) {
  if (t_span < 0.0) throw ParameterError("adaptive integration needs t_span >= 0");
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol must be positive");
  if (abs_tol < 0.0) abs_tol = rel_tol;
  const size_t dim = y.size();
  const double h_min = 1e-13 * std::max(1.0, t_span);
  double t = 0.0;
  double h = std::min(t_span > 0.0 ? t_span : 1.0, 1e-2);
  if (t_span == 0.0) return y;

  std::vector<double> k1, k2, k3, k4, k5, k6, k7, ytmp(dim), ynew(dim);
  auto stage = [&](const std::vector<double>& base, double hh,
                   std::initializer_list<std::pair<const std::vector<double>*, double>> terms) {
    for (size_t i = 0; i < dim; ++i) {
      double acc = base[i];
      for (const auto& [kv, c] : terms) acc += hh * c * (*kv)[i];
      ytmp[i] = acc;
    }
    return rhs_packed(model, ytmp);
  };

  while (t < t_span) {
    h = std::min(h, t_span - t);
    bool rejected_by_domain = false;
    double err = 0.0;
    try {
      k1 = rhs_packed(model, y);
      k2 = stage(y, h, {{&k1, a21}});
      k3 = stage(y, h, {{&k1, a31}, {&k2, a32}});
      k4 = stage(y, h, {{&k1, a41}, {&k2, a42}, {&k3, a43}});
      k5 = stage(y, h, {{&k1, a51}, {&k2, a52}, {&k3, a53}, {&k4, a54}});
      k6 = stage(y, h, {{&k1, a61}, {&k2, a62}, {&k3, a63}, {&k4, a64}, {&k5, a65}});
      for (size_t i = 0; i < dim; ++i)
        ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                              b6 * k6[i]);
      k7 = rhs_packed(model, ynew);
      for (size_t i = 0; i < dim; ++i) {
        const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                               e6 * k6[i] + e7 * k7[i]);
        const double scale =
            abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        err += (ei / scale) * (ei / scale);
      }
      err = std::sqrt(err / dim);
      if (!std::isfinite(err)) rejected_by_domain = true;
    } catch (const DomainError&) {
      rejected_by_domain = true;
    }

    if (rejected_by_domain) {
      h *= 0.5;
      if (h < h_min)
        throw StepSizeError("step size collapsed near the singular set");
      continue;
    }
    if (err <= 1.0) {
      t += h;
      y = ynew;
      if (recorder) recorder(t, y);
      const double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
    } else {
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
      if (h < h_min)
        throw StepSizeError("step size collapsed under error control");
    }
  }
  return y;
}

}  // namespace

std::vector<double> hamiltonian_rhs(const Model& model, const PhasePoint& x) {
  return rhs_packed(model, packed(x));
}

PhasePoint verlet_step(const Model& model, const PhasePoint& x, double dt) {
  const int n = x.dim();
  std::vector<double> q = x.q, p = x.p;
  auto g = potential_gradient(model, q);
  for (int i = 0; i < n; ++i) p[i] -= 0.5 * dt * g[i];
  for (int i = 0; i < n; ++i) q[i] += dt * p[i];
  g = potential_gradient(model, q);
  for (int i = 0; i < n; ++i) p[i] -= 0.5 * dt * g[i];
  return PhasePoint(std::move(q), std::move(p));
}

PhasePoint euler_step(const Model& model, const PhasePoint& x, double dt) {
  auto y = packed(x);
  const auto f = rhs_packed(model, y);
  for (size_t i = 0; i < y.size(); ++i) y[i] += dt * f[i];
  return unpacked(y);
}

namespace {

Trajectory fixed_step_drive(const Model& model, const PhasePoint& x0, double t_end,
                            double dt, int record_stride,
                            PhasePoint (*step)(const Model&, const PhasePoint&, double)) {
  if (!(dt > 0.0)) throw ParameterError("fixed-step integration needs dt > 0");
  if (t_end < 0.0) throw ParameterError("fixed-step integration needs t_end >= 0");
  if (record_stride < 1) throw ParameterError("record_stride must be >= 1");
  const long steps = std::lround(t_end / dt);
  Trajectory traj;
  traj.t.push_back(0.0);
  traj.y.push_back(x0);
  PhasePoint x = x0;
  for (long s = 1; s <= steps; ++s) {
    x = step(model, x, dt);
    if (s % record_stride == 0 || s == steps) {
      traj.t.push_back(s * dt);
      traj.y.push_back(x);
    }
  }
  return traj;
}

}  // namespace

Trajectory integrate_verlet(const Model& model, const PhasePoint& x0, double t_end,
                            double dt, int record_stride) {
  return fixed_step_drive(model, x0, t_end, dt, record_stride, &verlet_step);
}

Trajectory integrate_euler(const Model& model, const PhasePoint& x0, double t_end,
                           double dt, int record_stride) {
  return fixed_step_drive(model, x0, t_end, dt, record_stride, &euler_step);
}

Trajectory integrate_adaptive(const Model& model, const PhasePoint& x0,
                              double t_end, double rel_tol, double abs_tol) {
  Trajectory traj;
  traj.t.push_back(0.0);
  traj.y.push_back(x0);
  rk45_core(model, packed(x0), t_end, rel_tol, abs_tol,
            [&](double t, const std::vector<double>& y) {
              traj.t.push_back(t);
              traj.y.push_back(unpacked(y));
            });
  return traj;
}

PhasePoint integrate_to(const Model& model, const PhasePoint& x0, double t_span,
                        double rel_tol, double abs_tol) {
  return unpacked(rk45_core(model, packed(x0), t_span, rel_tol, abs_tol, nullptr));
}

std::vector<DriftEntry> conservation_drift(const Trajectory& traj,
                                           const std::vector<Integral>& integrals) {
  if (traj.y.empty()) throw ParameterError("conservation_drift: empty trajectory");
  std::vector<DriftEntry> out;
  for (const auto& integral : integrals) {
    const double f0 = integral.field(traj.y.front());
    double worst = 0.0;
    for (const auto& x : traj.y)
      worst = std::max(worst, std::abs(integral.field(x) - f0) / (1.0 + std::abs(f0)));
    out.push_back({integral.label, worst});
  }
  return out;
}

namespace {

double scaled_sup_distance(const std::vector<double>& y, const std::vector<double>& y0) {
  double d = 0.0;
  for (size_t i = 0; i < y.size(); ++i)
    d = std::max(d, std::abs(y[i] - y0[i]) / (1.0 + std::abs(y0[i])));
  return d;
}

}  // namespace

std::optional<double> orbit_closure(const Model& model, const PhasePoint& x0,
                                    double t_max, double match_tol, double rel_tol) {
  if (!(match_tol > 0.0)) throw ParameterError("orbit_closure: match_tol must be positive");
  if (!(t_max > 0.0)) throw ParameterError("orbit_closure: t_max must be positive");
  const std::vector<double> y0 = packed(x0);

  std::vector<double> ts{0.0};
  std::vector<std::vector<double>> ys{y0};
  rk45_core(model, y0, t_max, rel_tol, -1.0,
            [&](double t, const std::vector<double>& y) {
              ts.push_back(t);
              ys.push_back(y);
            });

  const size_t m = ts.size();
  std::vector<double> dist(m);
  for (size_t i = 0; i < m; ++i) dist[i] = scaled_sup_distance(ys[i], y0);

  const double arm = std::max(100.0 * match_tol, 1e-2);
  // D at an arbitrary time inside a bracket, by re-integrating from the
  // recorded state that starts it.
  auto dist_at = [&](size_t base, double t) {
    const auto y = rk45_core(model, ys[base], t - ts[base], rel_tol, -1.0, nullptr);
    return scaled_sup_distance(y, y0);
  };

  bool armed = false;
  for (size_t i = 1; i + 1 < m; ++i) {
    if (!armed) {
      armed = dist[i] > arm;
      continue;
    }
    if (!(dist[i] <= dist[i - 1] && dist[i] <= dist[i + 1])) continue;
    // Golden-section minimization over the bracket around the grid minimum.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = ts[i - 1], hi = ts[i + 1];
    const size_t base = i - 1;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = dist_at(base, c), fd = dist_at(base, d);
    const double window = std::max(1e-3 * match_tol, 1e-12);
    while (hi - lo > window) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - gr * (hi - lo);
        fc = dist_at(base, c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + gr * (hi - lo);
        fd = dist_at(base, d);
      }
    }
    const double t_star = 0.5 * (lo + hi);
    if (dist_at(base, t_star) <= match_tol) return t_star;
  }
  return std::nullopt;
}

void write_csv(const Trajectory& traj, const Field& hamiltonian, std::ostream& os) {
  if (traj.y.empty()) throw ParameterError("write_csv: empty trajectory");
  const int n = traj.y.front().dim();
  os << "t";
  for (int i = 1; i <= n; ++i) os << ",q" << i;
  for (int i = 1; i <= n; ++i) os << ",p" << i;
  os << ",H\n";
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
  };
  for (size_t r = 0; r < traj.y.size(); ++r) {
    emit(traj.t[r]);
    for (int i = 0; i < n; ++i) {
      os << ',';
      emit(traj.y[r].q[i]);
    }
    for (int i = 0; i < n; ++i) {
      os << ',';
      emit(traj.y[r].p[i]);
    }
    os << ',';
    emit(hamiltonian(traj.y[r]));
    os << '\n';
  }
}

CsvData read_csv(std::istream& is) {
  CsvData out;
  std::string line;
  if (!std::getline(is, line)) throw ParameterError("read_csv: empty input");
  int cols = 1;
  for (char ch : line) cols += (ch == ',');
  if (cols < 4 || cols % 2 != 0)
    throw ParameterError("read_csv: malformed header");
  const int n = (cols - 2) / 2;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::vector<double> vals;
    std::string cell;
    while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
    if (static_cast<int>(vals.size()) != cols)
      throw ParameterError("read_csv: row width does not match header");
    out.traj.t.push_back(vals[0]);
    out.traj.y.push_back(PhasePoint({vals.begin() + 1, vals.begin() + 1 + n},
                                    {vals.begin() + 1 + n, vals.begin() + 1 + 2 * n}));
    out.hamiltonian.push_back(vals.back());
  }
  return out;
}

}  // namespace superint

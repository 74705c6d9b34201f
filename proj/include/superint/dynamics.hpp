#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superint/models.hpp"

namespace superint {

struct Trajectory {
  std::vector<double> t;
  std::vector<PhasePoint> y;
};

// (dq/dt, dp/dt) = (dH/dp, -dH/dq), packed q-first like PhasePoint.
std::vector<double> hamiltonian_rhs(const Model& model, const PhasePoint& x);

// Kick-drift-kick leapfrog for H = |p|^2/2 + V(q); exactly time-reversible
// up to rounding. dt may be negative.
PhasePoint verlet_step(const Model& model, const PhasePoint& x, double dt);

// Forward Euler on Hamilton's equations. Not symplectic; kept as the
// negative control for the secular-drift comparisons.
PhasePoint euler_step(const Model& model, const PhasePoint& x, double dt);

// Fixed-step drivers; states are recorded every record_stride steps (the
// initial and final states always included).
Trajectory integrate_verlet(const Model& model, const PhasePoint& x0, double t_end,
                            double dt, int record_stride = 1);
Trajectory integrate_euler(const Model& model, const PhasePoint& x0, double t_end,
                           double dt, int record_stride = 1);

// Embedded Dormand-Prince 5(4) with per-component error control
// |err_i| <= abs_tol + rel_tol * |y_i|. abs_tol < 0 means rel_tol. A trial
// step that lands in the guarded singular region is rejected and retried
// smaller; StepSizeError once the step collapses below 1e-13 * max(1, t_end).
Trajectory integrate_adaptive(const Model& model, const PhasePoint& x0,
                              double t_end, double rel_tol, double abs_tol = -1.0);

// Same stepper, returning only the final state.
PhasePoint integrate_to(const Model& model, const PhasePoint& x0, double t_span,
                        double rel_tol, double abs_tol = -1.0);

struct DriftEntry {
  std::string label;
  double max_drift;  // max_t |f(x_t) - f(x_0)| / (1 + |f(x_0)|)
};
std::vector<DriftEntry> conservation_drift(const Trajectory& traj,
                                           const std::vector<Integral>& integrals);

// Earliest t* in (0, t_max] at which the trajectory returns to its initial
// point: the scaled sup-distance max_i |y_i(t) - y_i(0)| / (1 + |y_i(0)|)
// falls below match_tol. The distance is monitored along an adaptive
// trajectory; each armed local minimum is refined by golden-section down to
// a time window of 1e-3 * match_tol before testing. nullopt when the orbit
// does not close within t_max.
std::optional<double> orbit_closure(const Model& model, const PhasePoint& x0,
                                    double t_max, double match_tol,
                                    double rel_tol = 1e-10);

// Header t,q1..qN,p1..pN,H; one row per recorded state, %.17g precision.
void write_csv(const Trajectory& traj, const Field& hamiltonian, std::ostream& os);

struct CsvData {
  Trajectory traj;
  std::vector<double> hamiltonian;
};
CsvData read_csv(std::istream& is);

}  // namespace superint

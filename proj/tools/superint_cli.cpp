// Command-line front end: model catalog listing, superintegrability
// verification campaigns, trajectory integration, reduction consistency
// checks and closed-orbit detection.
//
// Exit codes: 0 success / check passed, 1 check failed or no closed orbit,
// 2 usage error, 3 numerical failure (domain, sampling or step-size).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superint/dynamics.hpp"
#include "superint/reduction.hpp"
#include "superint/verifier.hpp"

namespace {

using namespace superint;

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    try {
      size_t used = 0;
      const double v = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      out[key] = v;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--param", "cannot parse value in '" + kv + "'");
    }
  }
  return out;
}

std::vector<double> parse_csv_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "cannot parse '" + cell + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

int cmd_models_list(bool as_json) {
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& name : model_names()) {
      const Model m = model_by_name(name);
      nlohmann::ordered_json entry;
      entry["name"] = m.name;
      entry["n"] = m.n;
      entry["params"] = nlohmann::ordered_json::object();
      for (const auto& [key, value] : m.params) entry["params"][key] = value;
      entry["integrals"] = nlohmann::ordered_json::array();
      for (const auto& it : m.integrals)
        entry["integrals"].push_back({{"label", it.label}, {"order", it.order}});
      entry["expected_rank"] = m.expected_rank;
      j.push_back(entry);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& name : model_names()) {
      const Model m = model_by_name(name);
      std::printf("%-12s N=%d  integrals=%zu  expected_rank=%d\n", m.name.c_str(),
                  m.n, m.integrals.size(), m.expected_rank);
    }
  }
  return 0;
}

int cmd_verify(const std::string& name, const std::map<std::string, double>& params,
               int samples, uint64_t seed, double tol, int jobs,
               const std::string& out_path) {
  const Model model = model_by_name(name, params);
  SampleSpec spec;
  spec.count = samples;
  spec.seed = seed;
  const VerificationReport report = verify(model, spec, tol, jobs);

  std::printf("model %s  samples=%d  seed=%llu  tol=%g\n", report.model.c_str(),
              report.samples, static_cast<unsigned long long>(report.seed),
              report.tol);
  for (const auto& it : report.integrals)
    std::printf("  {H,%-6s} order %2d  max residual %.3e  %s\n", it.label.c_str(),
                it.order, it.max_residual, it.max_residual <= tol ? "ok" : "FAIL");
  std::printf("  rank expected %d  observed min %d  fraction %.3f\n",
              report.rank.expected, report.rank.observed_min, report.rank.fraction);
  std::printf("%s\n", report.pass ? "PASS" : "FAIL");
  if (!out_path.empty()) write_report_atomic(report, out_path);
  return report.pass ? 0 : 1;
}

int cmd_integrate(const std::string& name, const std::map<std::string, double>& params,
                  const std::string& q_text, const std::string& p_text, double t_end,
                  const std::string& method, double dt, double rtol, int stride,
                  const std::string& out_path) {
  const Model model = model_by_name(name, params);
  const auto q = parse_csv_list(q_text, "--q");
  const auto p = parse_csv_list(p_text, "--p");
  if (static_cast<int>(q.size()) != model.n || static_cast<int>(p.size()) != model.n)
    throw CLI::ValidationError("--q/--p", "need " + std::to_string(model.n) +
                                              " components for " + name);
  const PhasePoint x0(q, p);
  Trajectory traj;
  if (method == "verlet") {
    traj = integrate_verlet(model, x0, t_end, dt, stride);
  } else if (method == "rk45") {
    traj = integrate_adaptive(model, x0, t_end, rtol);
  } else {
    throw CLI::ValidationError("--method", "must be verlet or rk45");
  }
  const auto drift = conservation_drift(traj, model.integrals);
  const double h0 = model.hamiltonian(traj.y.front());
  double h_drift = 0.0;
  for (const auto& x : traj.y)
    h_drift = std::max(h_drift,
                       std::abs(model.hamiltonian(x) - h0) / (1.0 + std::abs(h0)));
  std::printf("%s %s t=%g  steps recorded=%zu\n", name.c_str(), method.c_str(), t_end,
              traj.y.size());
  std::printf("  drift H      %.3e\n", h_drift);
  for (const auto& d : drift) std::printf("  drift %-6s %.3e\n", d.label.c_str(), d.max_drift);
  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    write_csv(traj, model.hamiltonian, os);
  }
  return 0;
}

int cmd_reduce_check(const std::string& pair, const std::map<std::string, double>& params,
                     int samples, uint64_t seed) {
  std::string family = pair;
  if (family == "coulomb6:coulomb3") family = "coulomb";
  if (family == "oscillator4:oscillator2") family = "oscillator";
  SampleSpec spec;
  spec.count = samples;
  spec.seed = seed;
  const ReductionSuiteResult result = run_reduction_suite(family, params, spec);
  std::printf("reduction %s  samples=%d seed=%llu\n", result.family.c_str(), samples,
              static_cast<unsigned long long>(seed));
  for (const auto& entry : result.entries)
    std::printf("  %-4s mismatch %.3e  angle spread %.3e  tol %.0e  %s\n",
                entry.label.c_str(), entry.report.max_mismatch,
                entry.report.max_angle_spread, entry.tol,
                entry.report.pass ? "ok" : "FAIL");
  std::printf("  momentum map error %.3e  tol %.0e  %s\n", result.momentum_map_error,
              result.momentum_map_tol,
              result.momentum_map_error <= result.momentum_map_tol ? "ok" : "FAIL");
  std::printf("%s\n", result.pass ? "PASS" : "FAIL");
  return result.pass ? 0 : 1;
}

int cmd_orbit(const std::string& name, const std::map<std::string, double>& params,
              const std::string& q_text, const std::string& p_text, double t_max,
              double match_tol, double rtol) {
  const Model model = model_by_name(name, params);
  const auto q = parse_csv_list(q_text, "--q");
  const auto p = parse_csv_list(p_text, "--p");
  if (static_cast<int>(q.size()) != model.n || static_cast<int>(p.size()) != model.n)
    throw CLI::ValidationError("--q/--p", "need " + std::to_string(model.n) +
                                              " components for " + name);
  const auto t_star = orbit_closure(model, PhasePoint(q, p), t_max, match_tol, rtol);
  if (t_star) {
    std::printf("closed orbit at t = %.12g\n", *t_star);
    return 0;
  }
  std::printf("no closed orbit within t_max = %g\n", t_max);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superintegrable model verification toolkit"};
  app.require_subcommand(1);

  // models list
  auto* models_cmd = app.add_subcommand("models", "model catalog");
  models_cmd->require_subcommand(1);
  auto* list_cmd = models_cmd->add_subcommand("list", "list catalog models");
  bool list_json = false;
  list_cmd->add_flag("--json", list_json, "machine-readable listing");

  std::string name, q_text, p_text, out_path, method = "verlet", pair;
  std::vector<std::string> param_kvs;
  int samples = 1000, jobs = 0, stride = 1;
  uint64_t seed = 42;
  double tol = 1e-9, t_end = 10.0, dt = 1e-3, rtol = 1e-10, t_max = 10.0,
         match_tol = 1e-5;

  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->add_option("model", name)->required();
  verify_cmd->add_option("--param", param_kvs, "model parameter override key=value");
  verify_cmd->add_option("--samples", samples);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--tol", tol);
  verify_cmd->add_option("--jobs", jobs, "1 = serial, 0 = all threads");
  verify_cmd->add_option("--out", out_path, "write the JSON report here");

  auto* integrate_cmd = app.add_subcommand("integrate", "integrate a trajectory");
  integrate_cmd->add_option("model", name)->required();
  integrate_cmd->add_option("--param", param_kvs);
  integrate_cmd->add_option("--q", q_text)->required();
  integrate_cmd->add_option("--p", p_text)->required();
  integrate_cmd->add_option("--t-end", t_end)->required();
  integrate_cmd->add_option("--method", method, "verlet (default) or rk45");
  integrate_cmd->add_option("--dt", dt, "verlet step");
  integrate_cmd->add_option("--rtol", rtol, "rk45 relative tolerance");
  integrate_cmd->add_option("--stride", stride, "record every K-th verlet step");
  integrate_cmd->add_option("--out", out_path, "write trajectory CSV here");

  auto* reduce_cmd = app.add_subcommand("reduce-check", "full vs reduced consistency");
  reduce_cmd->add_option("pair", pair, "coulomb or oscillator")->required();
  reduce_cmd->add_option("--param", param_kvs);
  reduce_cmd->add_option("--samples", samples);
  reduce_cmd->add_option("--seed", seed);

  auto* orbit_cmd = app.add_subcommand("orbit", "detect a closed orbit");
  orbit_cmd->add_option("model", name)->required();
  orbit_cmd->add_option("--param", param_kvs);
  orbit_cmd->add_option("--q", q_text)->required();
  orbit_cmd->add_option("--p", p_text)->required();
  orbit_cmd->add_option("--t-max", t_max)->required();
  orbit_cmd->add_option("--match-tol", match_tol);
  orbit_cmd->add_option("--rtol", rtol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    const auto params = parse_params(param_kvs);
    if (list_cmd->parsed()) return cmd_models_list(list_json);
    if (verify_cmd->parsed())
      return cmd_verify(name, params, samples, seed, tol, jobs, out_path);
    if (integrate_cmd->parsed())
      return cmd_integrate(name, params, q_text, p_text, t_end, method, dt, rtol,
                           stride, out_path);
    if (reduce_cmd->parsed()) return cmd_reduce_check(pair, params, samples, seed);
    if (orbit_cmd->parsed())
      return cmd_orbit(name, params, q_text, p_text, t_max, match_tol, rtol);
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const StepSizeError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const SamplingError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

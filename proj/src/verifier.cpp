#include "superint/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <exception>

#include <Eigen/SVD>

#include "superint/bracket.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superint {

namespace {

// Run body(i) for i in [0, count). jobs == 1 is the serial reference path;
// anything else goes through OpenMP when available. Exceptions raised inside
// the parallel region are captured per index and the lowest-index one is
// rethrown, matching the serial behavior.
template <class Body>
void for_each_point(int count, int jobs, Body&& body) {
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  std::vector<std::exception_ptr> errors(count);
  const int nt = jobs > 1 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
#else
  for (int i = 0; i < count; ++i) body(i);
#endif
}

std::vector<const Field*> field_rows(const Model& model) {
  std::vector<const Field*> rows;
  rows.push_back(&model.hamiltonian);
  for (const auto& integral : model.integrals) rows.push_back(&integral.field);
  return rows;
}

struct PointGradients {
  std::vector<std::vector<double>> grads;
  std::vector<double> norms;
};

PointGradients gradients_at(const std::vector<const Field*>& rows,
                            const PhasePoint& x) {
  PointGradients out;
  out.grads.reserve(rows.size());
  out.norms.reserve(rows.size());
  for (const Field* f : rows) {
    out.grads.push_back(gradient(*f, x));
    out.norms.push_back(norm2_of(out.grads.back()));
  }
  return out;
}

}  // namespace

std::vector<IntegralResult> check_commutation(const Model& model,
                                              const SampleSpec& spec, int jobs) {
  const auto rows = field_rows(model);
  const int m = static_cast<int>(model.integrals.size());
  std::vector<std::vector<double>> residuals(spec.count, std::vector<double>(m));
  for_each_point(spec.count, jobs, [&](int i) {
    const PhasePoint x = sample_one(spec, model.n, i);
    const auto pg = gradients_at(rows, x);
    for (int j = 0; j < m; ++j)
      residuals[i][j] = std::abs(bracket_from_gradients(pg.grads[0], pg.grads[j + 1])) /
                        (1.0 + pg.norms[0] * pg.norms[j + 1]);
  });
  std::vector<IntegralResult> out(m);
  for (int j = 0; j < m; ++j)
    out[j] = {model.integrals[j].label, model.integrals[j].order, 0.0};
  for (int i = 0; i < spec.count; ++i)
    for (int j = 0; j < m; ++j)
      out[j].max_residual = std::max(out[j].max_residual, residuals[i][j]);
  return out;
}

int independence_rank(const std::vector<Field>& fields, const PhasePoint& x,
                      double sv_threshold) {
  if (fields.empty()) return 0;
  const int cols = 2 * x.dim();
  Eigen::MatrixXd m(fields.size(), cols);
  for (size_t r = 0; r < fields.size(); ++r) {
    const auto g = gradient(fields[r], x);
    const double n = norm2_of(g);
    for (int c = 0; c < cols; ++c) m(r, c) = n > 0.0 ? g[c] / n : 0.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > sv_threshold * sv(0)) ++rank;
  return rank;
}

int independence_rank(const Model& model, const PhasePoint& x, double sv_threshold) {
  std::vector<Field> fields;
  fields.push_back(model.hamiltonian);
  for (const auto& integral : model.integrals) fields.push_back(integral.field);
  return independence_rank(fields, x, sv_threshold);
}

std::vector<std::vector<double>> involution_table(const Model& model,
                                                 const SampleSpec& spec, int jobs) {
  const auto rows = field_rows(model);
  const int m = static_cast<int>(rows.size());
  std::vector<std::vector<double>> per_point(spec.count);
  for_each_point(spec.count, jobs, [&](int i) {
    const PhasePoint x = sample_one(spec, model.n, i);
    const auto pg = gradients_at(rows, x);
    std::vector<double> flat(m * m, 0.0);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const double v = std::abs(bracket_from_gradients(pg.grads[a], pg.grads[b])) /
                         (1.0 + pg.norms[a] * pg.norms[b]);
        flat[a * m + b] = v;
        flat[b * m + a] = v;
      }
    per_point[i] = std::move(flat);
  });
  std::vector<std::vector<double>> table(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < spec.count; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        table[a][b] = std::max(table[a][b], per_point[i][a * m + b]);
  return table;
}

VerificationReport verify(const Model& model, const SampleSpec& spec, double tol,
                          int jobs) {
  VerificationReport report;
  report.model = model.name;
  report.params = model.params;
  report.seed = spec.seed;
  report.samples = spec.count;
  report.tol = tol;
  report.involution = involution_table(model, spec, jobs);

  const int m = static_cast<int>(model.integrals.size());
  report.integrals.resize(m);
  bool residuals_ok = true;
  for (int j = 0; j < m; ++j) {
    report.integrals[j] = {model.integrals[j].label, model.integrals[j].order,
                           report.involution[0][j + 1]};
    residuals_ok = residuals_ok && report.integrals[j].max_residual <= tol;
  }

  const int rank_points = std::min(spec.count, 100);
  std::vector<int> ranks(rank_points, 0);
  for_each_point(rank_points, jobs,
                 [&](int i) { ranks[i] = independence_rank(model, sample_one(spec, model.n, i)); });
  report.rank.expected = model.expected_rank;
  report.rank.observed_min = rank_points > 0 ? *std::min_element(ranks.begin(), ranks.end()) : 0;
  int hits = 0;
  for (int r : ranks) hits += (r == model.expected_rank);
  report.rank.fraction = rank_points > 0 ? static_cast<double>(hits) / rank_points : 0.0;

  report.pass = residuals_ok && report.rank.fraction >= 0.95;

  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  report.timestamp = buf;
  return report;
}

}  // namespace superint

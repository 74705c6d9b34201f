#include "superint/bracket.hpp"

#include <cmath>

namespace superint {

std::vector<double> gradient(const Field& f, const PhasePoint& x) {
  const int n = x.dim();
  if (f.arity() != 0 && f.arity() != n)
    throw DimensionError("gradient: point dimension does not match field arity");
  std::vector<Dual> q(n), p(n);
  for (int i = 0; i < n; ++i) {
    q[i] = Dual(x.q[i]);
    p[i] = Dual(x.p[i]);
  }
  std::vector<double> g(2 * n);
  for (int d = 0; d < n; ++d) {
    q[d].dot = 1.0;
    g[d] = f.eval_raw(q.data(), p.data()).dot;
    q[d].dot = 0.0;
  }
  for (int d = 0; d < n; ++d) {
    p[d].dot = 1.0;
    g[n + d] = f.eval_raw(q.data(), p.data()).dot;
    p[d].dot = 0.0;
  }
  return g;
}

std::vector<double> fd_gradient(const Field& f, const PhasePoint& x, double h) {
  const int n = x.dim();
  if (f.arity() != 0 && f.arity() != n)
    throw DimensionError("fd_gradient: point dimension does not match field arity");
  if (!(h > 0)) throw ParameterError("fd_gradient: step must be positive");
  std::vector<double> q = x.q, p = x.p;
  std::vector<double> g(2 * n);
  auto central = [&](double* slot) {
    const double keep = *slot;
    *slot = keep + h;
    const double fp = f.eval_raw(q.data(), p.data());
    *slot = keep - h;
    const double fm = f.eval_raw(q.data(), p.data());
    *slot = keep;
    return (fp - fm) / (2.0 * h);
  };
  for (int d = 0; d < n; ++d) g[d] = central(&q[d]);
  for (int d = 0; d < n; ++d) g[n + d] = central(&p[d]);
  return g;
}

double bracket_from_gradients(const std::vector<double>& gf,
                              const std::vector<double>& gg) {
  if (gf.size() != gg.size() || gf.size() % 2 != 0)
    throw DimensionError("bracket_from_gradients: mismatched gradient lengths");
  const int n = static_cast<int>(gf.size() / 2);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += gf[i] * gg[n + i] - gf[n + i] * gg[i];
  return s;
}

double poisson_bracket(const Field& f, const Field& g, const PhasePoint& x) {
  return bracket_from_gradients(gradient(f, x), gradient(g, x));
}

std::complex<double> poisson_bracket(const ComplexField& f, const ComplexField& g,
                                     const PhasePoint& x) {
  const auto fr = gradient(f.re, x), fi = gradient(f.im, x);
  const auto gr = gradient(g.re, x), gi = gradient(g.im, x);
  const double rr = bracket_from_gradients(fr, gr);
  const double ii = bracket_from_gradients(fi, gi);
  const double ri = bracket_from_gradients(fr, gi);
  const double ir = bracket_from_gradients(fi, gr);
  return {rr - ii, ri + ir};
}

double norm2_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double normalized_bracket_residual(const Field& f, const Field& g,
                                   const PhasePoint& x) {
  const auto gf = gradient(f, x), gg = gradient(g, x);
  return std::abs(bracket_from_gradients(gf, gg)) /
         (1.0 + norm2_of(gf) * norm2_of(gg));
}

Weights::Weights(std::vector<int> n_, double omega_)
    : n(std::move(n_)), omega(omega_) {
  if (!(omega > 0)) throw ParameterError("Weights: omega must be positive");
  if (n.empty() || n.size() % 2 != 0)
    throw ParameterError("Weights: need an even, nonempty multiplier list");
  for (size_t k = 0; k < n.size(); ++k) {
    if (n[k] < 1) throw ParameterError("Weights: multipliers must be >= 1");
    if (k % 2 == 1 && n[k] != n[k - 1])
      throw ParameterError("Weights: coordinates of a pair must share a multiplier");
  }
}

Weights Weights::from_pairs(const std::vector<int>& pair_n, double omega) {
  std::vector<int> n;
  n.reserve(2 * pair_n.size());
  for (int v : pair_n) {
    n.push_back(v);
    n.push_back(v);
  }
  return Weights(std::move(n), omega);
}

std::complex<double> z_bracket(const ComplexField& f, const ComplexField& g,
                               const PhasePoint& x, const Weights& w) {
  const int n = x.dim();
  if (static_cast<int>(w.n.size()) != n)
    throw DimensionError("z_bracket: weights do not match point dimension");
  const auto fr = gradient(f.re, x), fi = gradient(f.im, x);
  const auto gr = gradient(g.re, x), gi = gradient(g.im, x);
  using C = std::complex<double>;
  const C i_unit(0.0, 1.0);
  C acc(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    const C dfdx(fr[j], fi[j]);
    const C dfdp(fr[n + j], fi[n + j]);
    const C dgdx(gr[j], gi[j]);
    const C dgdp(gr[n + j], gi[n + j]);
    const double m = w.n[j] * w.omega;
    const C df_dz = 0.5 * dfdp + i_unit / (2.0 * m) * dfdx;
    const C df_dzb = 0.5 * dfdp - i_unit / (2.0 * m) * dfdx;
    const C dg_dz = 0.5 * dgdp + i_unit / (2.0 * m) * dgdx;
    const C dg_dzb = 0.5 * dgdp - i_unit / (2.0 * m) * dgdx;
    acc += static_cast<double>(w.n[j]) * (df_dz * dg_dzb - df_dzb * dg_dz);
  }
  return -2.0 * i_unit * w.omega * acc;
}

}  // namespace superint

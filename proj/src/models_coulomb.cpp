#include <cmath>

#include "superint/models.hpp"

namespace superint {

const Integral& Model::integral(const std::string& label) const {
  for (const auto& it : integrals)
    if (it.label == label) return it;
  throw IndexError("no integral labeled " + label + " in model " + name);
}

Model coulomb6(double gamma) {
  if (!std::isfinite(gamma)) throw ParameterError("coulomb6: gamma must be finite");
  const int N = 6;
  std::vector<Field> x, p;
  for (int i = 0; i < N; ++i) {
    x.push_back(Field::q(i, N));
    p.push_back(Field::p(i, N));
  }
  Field r2 = x[0] * x[0];
  Field p2 = p[0] * p[0];
  Field s = x[0] * p[0];
  for (int i = 1; i < N; ++i) {
    r2 = r2 + x[i] * x[i];
    p2 = p2 + p[i] * p[i];
    s = s + x[i] * p[i];
  }
  const Field r = sqrt(r2);

  Model m;
  m.name = "coulomb6";
  m.n = N;
  m.params = {{"gamma", gamma}};
  m.potential = -gamma / r;
  m.hamiltonian = 0.5 * p2 + m.potential;
  m.expected_rank = 11;
  m.singular_set = "r = 0";

  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      m.integrals.push_back({"L" + std::to_string(i + 1) + std::to_string(j + 1),
                             x[i] * p[j] - x[j] * p[i], 1});
  for (int i = 0; i < N; ++i)
    m.integrals.push_back(
        {"A" + std::to_string(i + 1), x[i] * p2 - p[i] * s - gamma * x[i] / r, 2});
  return m;
}

Model coulomb3_reduced(const CoulombParams& params) {
  if (!std::isfinite(params.gamma))
    throw ParameterError("coulomb3_reduced: gamma must be finite");
  for (double k : params.k)
    if (!(k >= 0.0)) throw ParameterError("coulomb3_reduced: barriers need k_i >= 0");
  const double gamma = params.gamma;
  const auto& k = params.k;
  const int N = 3;
  std::vector<Field> x, p;
  for (int i = 0; i < N; ++i) {
    x.push_back(Field::q(i, N));
    p.push_back(Field::p(i, N));
  }
  const Field r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  const Field r = sqrt(r2);
  const Field p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const Field s = x[0] * p[0] + x[1] * p[1] + x[2] * p[2];

  // Zero-coefficient barrier terms are omitted rather than multiplied by
  // zero, so that a k_i = 0 model stays regular on the x_i = 0 plane.
  auto barrier_sum = [&](double scale) {
    Field acc = Field::constant(0.0);
    for (int i = 0; i < N; ++i)
      if (k[i] != 0.0) acc = acc + (scale * k[i]) / (x[i] * x[i]);
    return acc;
  };

  Model m;
  m.name = "coulomb3";
  m.n = N;
  m.params = {{"gamma", gamma}, {"k1", k[0]}, {"k2", k[1]}, {"k3", k[2]}};
  m.potential = -gamma / r + barrier_sum(1.0);
  m.hamiltonian = 0.5 * p2 + m.potential;
  m.expected_rank = 5;
  m.singular_set = "r = 0; x_i = 0 for each k_i > 0";

  auto rotation_descendant = [&](int a, int b) {
    Field f = pow(x[a] * p[b] - x[b] * p[a], 2);
    if (k[a] != 0.0) f = f + (2.0 * k[a]) * (x[b] * x[b]) / (x[a] * x[a]);
    if (k[b] != 0.0) f = f + (2.0 * k[b]) * (x[a] * x[a]) / (x[b] * x[b]);
    return f;
  };
  m.integrals.push_back({"I1", rotation_descendant(0, 1), 2});
  m.integrals.push_back({"I2", rotation_descendant(0, 2), 2});
  m.integrals.push_back({"I3", rotation_descendant(1, 2), 2});

  // G is twice the "free" part of H: |p|^2 + 2 sum k_i/x_i^2 - gamma/r.
  const Field G = p2 + barrier_sum(2.0) - gamma / r;
  for (int i = 0; i < N; ++i) {
    Field t = G * G * (x[i] * x[i]) - 2.0 * G * s * (x[i] * p[i]);
    Field pp = p[i] * p[i];
    if (k[i] != 0.0) pp = pp + (2.0 * k[i]) / (x[i] * x[i]);
    t = t + s * s * pp;
    m.integrals.push_back({"T" + std::to_string(i + 1), t, 4});
  }

  // Closed form of T1 + T2 + T3.
  const Field B = (2.0 * p2 * r2 - s * s) / (2.0 * r) +
                  2.0 * r * (-gamma / (2.0 * r) + barrier_sum(1.0));
  m.integrals.push_back(
      {"T", B * B + gamma * (s * s) / r - pow(s, 4) / (4.0 * r2), 4});

  if (k[2] == 0.0) {
    const Field L1 = x[1] * p[2] - x[2] * p[1];
    const Field L2 = x[2] * p[0] - x[0] * p[2];
    Field core = -gamma / (2.0 * r);
    if (k[0] != 0.0) core = core + k[0] / (x[0] * x[0]);
    if (k[1] != 0.0) core = core + k[1] / (x[1] * x[1]);
    m.integrals.push_back({"D", p[1] * L1 - p[0] * L2 - 2.0 * (x[2] * core), 2});
  }
  return m;
}

}  // namespace superint

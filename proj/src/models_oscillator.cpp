#include <cmath>

#include "superint/models.hpp"

namespace superint {

namespace {

void check_oscillator(double omega, int n1, int n2) {
  if (!(omega > 0.0)) throw ParameterError("oscillator: omega must be positive");
  if (n1 < 1 || n2 < 1) throw ParameterError("oscillator: n1, n2 must be >= 1");
}

// z_j = p_j - i m_j w x_j on a 4d model.
ComplexField z_field(int j, int mj, double omega) {
  return {Field::p(j, 4), (-static_cast<double>(mj) * omega) * Field::q(j, 4)};
}

std::array<int, 4> multipliers(const Model& osc4) {
  const int n1 = static_cast<int>(osc4.params.at("n1"));
  const int n2 = static_cast<int>(osc4.params.at("n2"));
  return {n1, n1, n2, n2};
}

void require_oscillator4(const Model& m, const char* who) {
  if (m.n != 4 || !m.params.count("omega") || !m.params.count("n1") ||
      !m.params.count("n2"))
    throw ParameterError(std::string(who) + ": expects an oscillator4 model");
}

}  // namespace

Model oscillator4(double omega, int n1, int n2) {
  check_oscillator(omega, n1, n2);
  const int N = 4;
  const std::array<int, 4> mlt{n1, n1, n2, n2};
  std::vector<Field> x, p;
  for (int i = 0; i < N; ++i) {
    x.push_back(Field::q(i, N));
    p.push_back(Field::p(i, N));
  }

  Model m;
  m.name = "oscillator4";
  m.n = N;
  m.params = {{"omega", omega},
              {"n1", static_cast<double>(n1)},
              {"n2", static_cast<double>(n2)}};
  Field quad = Field::constant(0.0);
  for (int i = 0; i < N; ++i)
    quad = quad + (0.5 * omega * omega * mlt[i] * mlt[i]) * (x[i] * x[i]);
  m.potential = quad;
  m.hamiltonian =
      0.5 * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]) + quad;
  m.expected_rank = 7;
  m.singular_set = "";

  m.integrals.push_back({"L12", x[0] * p[1] - x[1] * p[0], 1});
  m.integrals.push_back({"L34", x[2] * p[3] - x[3] * p[2], 1});
  auto block = [&](int i, int j) {
    return p[i] * p[j] +
           (mlt[i] * mlt[j] * omega * omega) * (x[i] * x[j]);
  };
  m.integrals.push_back({"T11", block(0, 0), 2});
  m.integrals.push_back({"T12", block(0, 1), 2});
  m.integrals.push_back({"T22", block(1, 1), 2});
  m.integrals.push_back({"T33", block(2, 2), 2});
  m.integrals.push_back({"T34", block(2, 3), 2});
  m.integrals.push_back({"T44", block(3, 3), 2});
  const ComplexField c13 = jauch_hill(m, 1, 3);
  m.integrals.push_back({"ReC13", c13.re, n1 + n2});
  m.integrals.push_back({"ImC13", c13.im, n1 + n2 - 1});
  return m;
}

ComplexField jauch_hill(const Model& osc4, int j, int k) {
  require_oscillator4(osc4, "jauch_hill");
  if (j < 1 || j > 4 || k < 1 || k > 4)
    throw IndexError("jauch_hill: coordinate labels must lie in [1,4]");
  const auto mlt = multipliers(osc4);
  const double omega = osc4.params.at("omega");
  const ComplexField zj = z_field(j - 1, mlt[j - 1], omega);
  const ComplexField zk = z_field(k - 1, mlt[k - 1], omega);
  return pow(zj, mlt[k - 1]) * pow(conj(zk), mlt[j - 1]);
}

std::array<ComplexField, 4> invariant_basis(const Model& osc4) {
  require_oscillator4(osc4, "invariant_basis");
  const auto mlt = multipliers(osc4);
  const double omega = osc4.params.at("omega");
  std::array<ComplexField, 4> z;
  for (int j = 0; j < 4; ++j) z[j] = z_field(j, mlt[j], omega);
  const ComplexField xi1 = z[0] * z[0] + z[1] * z[1];
  const ComplexField eta1 = ComplexField::from_real(norm2(z[0]) + norm2(z[1]));
  const ComplexField xi3 = z[2] * z[2] + z[3] * z[3];
  const ComplexField eta2 = ComplexField::from_real(norm2(z[2]) + norm2(z[3]));
  return {xi1, eta1, xi3, eta2};
}

std::vector<LabeledComplex> oscillator4_invariants(const Model& osc4) {
  const auto basis = invariant_basis(osc4);
  const int n1 = static_cast<int>(osc4.params.at("n1"));
  const int n2 = static_cast<int>(osc4.params.at("n2"));
  const ComplexField& xi1 = basis[0];
  const ComplexField& eta1 = basis[1];
  const ComplexField& xi3 = basis[2];
  const ComplexField& eta2 = basis[3];
  std::vector<LabeledComplex> out;
  out.push_back({"E1", 0.5 * eta1});
  out.push_back({"E2", 0.5 * eta2});
  out.push_back({"Q1", pow(xi1, n2) * pow(conj(xi3), n1)});
  out.push_back({"I1", ComplexField::from_real(norm2(xi1))});
  out.push_back({"I2", ComplexField::from_real(norm2(xi3))});
  return out;
}

namespace {

struct Osc2Fields {
  ComplexField f1, f2;
};

// Reductions of xi1, xi3 to the 2d chart: barrier term k/x^2 replaces the
// angular kinetic piece.
Osc2Fields oscillator2_complex(double omega, int n1, int n2, double k1,
                               double k2) {
  const Field x1 = Field::q(0, 2), x2 = Field::q(1, 2);
  const Field p1 = Field::p(0, 2), p2 = Field::p(1, 2);
  Field re1 = p1 * p1 - (n1 * n1 * omega * omega) * (x1 * x1);
  if (k1 != 0.0) re1 = re1 + k1 / (x1 * x1);
  Field re2 = p2 * p2 - (n2 * n2 * omega * omega) * (x2 * x2);
  if (k2 != 0.0) re2 = re2 + k2 / (x2 * x2);
  return {{re1, (-2.0 * n1 * omega) * (p1 * x1)},
          {re2, (2.0 * n2 * omega) * (p2 * x2)}};
}

}  // namespace

Model oscillator2_reduced(const OscillatorParams& params) {
  check_oscillator(params.omega, params.n1, params.n2);
  for (double k : params.k)
    if (!(k >= 0.0)) throw ParameterError("oscillator2_reduced: barriers need k_i >= 0");
  const double omega = params.omega;
  const int n1 = params.n1, n2 = params.n2;
  const double k1 = params.k[0], k2 = params.k[1];
  const Field x1 = Field::q(0, 2), x2 = Field::q(1, 2);
  const Field p1 = Field::p(0, 2), p2 = Field::p(1, 2);

  Model m;
  m.name = "oscillator2";
  m.n = 2;
  m.params = {{"omega", omega},
              {"n1", static_cast<double>(n1)},
              {"n2", static_cast<double>(n2)},
              {"k1", k1},
              {"k2", k2}};

  Field e1 = 0.5 * (p1 * p1) + (0.5 * n1 * n1 * omega * omega) * (x1 * x1);
  if (k1 != 0.0) e1 = e1 + (0.5 * k1) / (x1 * x1);
  Field e2 = 0.5 * (p2 * p2) + (0.5 * n2 * n2 * omega * omega) * (x2 * x2);
  if (k2 != 0.0) e2 = e2 + (0.5 * k2) / (x2 * x2);
  m.hamiltonian = e1 + e2;
  Field pot = (0.5 * n1 * n1 * omega * omega) * (x1 * x1) +
              (0.5 * n2 * n2 * omega * omega) * (x2 * x2);
  if (k1 != 0.0) pot = pot + (0.5 * k1) / (x1 * x1);
  if (k2 != 0.0) pot = pot + (0.5 * k2) / (x2 * x2);
  m.potential = pot;
  m.expected_rank = 3;
  m.singular_set = "x_i = 0 for each k_i > 0";

  const auto cf = oscillator2_complex(omega, n1, n2, k1, k2);
  const ComplexField q1 = pow(cf.f1, n2) * pow(cf.f2, n1);
  m.integrals.push_back({"E1", e1, 2});
  m.integrals.push_back({"E2", e2, 2});
  m.integrals.push_back({"Q", q1.re, 2 * (n1 + n2)});
  m.integrals.push_back({"ImQ1", q1.im, 2 * (n1 + n2) - 1});
  m.integrals.push_back({"I1", norm2(cf.f1), 4});
  m.integrals.push_back({"I2", norm2(cf.f2), 4});

  if (n1 == 1 && n2 == 1) {
    Field rd = pow(p1 * x2 - p2 * x1, 2);
    if (k1 != 0.0) rd = rd + k1 * (x2 * x2) / (x1 * x1);
    if (k2 != 0.0) rd = rd + k2 * (x1 * x1) / (x2 * x2);
    m.integrals.push_back({"Rd", rd, 2});
  }
  if (n1 == 1 && n2 == 2 && k2 == 0.0) {
    Field re = p1 * (x2 * p1 - x1 * p2) - (omega * omega) * (x1 * x1 * x2);
    if (k1 != 0.0) re = re + k1 * x2 / (x1 * x1);
    m.integrals.push_back({"Re", re, 2});
  }
  return m;
}

ComplexField oscillator2_q1(const Model& osc2) {
  if (osc2.n != 2 || !osc2.params.count("omega") || !osc2.params.count("n1") ||
      !osc2.params.count("n2") || !osc2.params.count("k1") ||
      !osc2.params.count("k2"))
    throw ParameterError("oscillator2_q1: expects an oscillator2 model");
  const auto cf = oscillator2_complex(
      osc2.params.at("omega"), static_cast<int>(osc2.params.at("n1")),
      static_cast<int>(osc2.params.at("n2")), osc2.params.at("k1"),
      osc2.params.at("k2"));
  return pow(cf.f1, static_cast<int>(osc2.params.at("n2"))) *
         pow(cf.f2, static_cast<int>(osc2.params.at("n1")));
}

namespace {

double override_or(const std::map<std::string, double>& o, const std::string& key,
                   double fallback, std::vector<std::string>& seen) {
  auto it = o.find(key);
  if (it == o.end()) return fallback;
  seen.push_back(key);
  return it->second;
}

int as_int(double v, const std::string& key) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-12)
    throw ParameterError("parameter " + key + " must be an integer");
  return static_cast<int>(r);
}

void reject_unknown(const std::map<std::string, double>& o,
                    const std::vector<std::string>& seen) {
  for (const auto& [key, value] : o) {
    (void)value;
    bool found = false;
    for (const auto& s : seen)
      if (s == key) found = true;
    if (!found) throw ParameterError("unknown parameter " + key);
  }
}

}  // namespace

Model model_by_name(const std::string& name,
                    const std::map<std::string, double>& overrides) {
  std::vector<std::string> seen;
  if (name == "coulomb6") {
    double gamma = override_or(overrides, "gamma", 1.0, seen);
    reject_unknown(overrides, seen);
    return coulomb6(gamma);
  }
  if (name == "coulomb3") {
    CoulombParams p;
    p.gamma = override_or(overrides, "gamma", 1.0, seen);
    p.k[0] = override_or(overrides, "k1", 0.3, seen);
    p.k[1] = override_or(overrides, "k2", 0.5, seen);
    p.k[2] = override_or(overrides, "k3", 0.7, seen);
    reject_unknown(overrides, seen);
    return coulomb3_reduced(p);
  }
  if (name == "oscillator4") {
    double omega = override_or(overrides, "omega", 1.0, seen);
    int n1 = as_int(override_or(overrides, "n1", 1.0, seen), "n1");
    int n2 = as_int(override_or(overrides, "n2", 2.0, seen), "n2");
    reject_unknown(overrides, seen);
    return oscillator4(omega, n1, n2);
  }
  if (name == "oscillator2") {
    OscillatorParams p;
    p.omega = override_or(overrides, "omega", 1.0, seen);
    p.n1 = as_int(override_or(overrides, "n1", 1.0, seen), "n1");
    p.n2 = as_int(override_or(overrides, "n2", 2.0, seen), "n2");
    p.k[0] = override_or(overrides, "k1", 0.4, seen);
    p.k[1] = override_or(overrides, "k2", 0.9, seen);
    reject_unknown(overrides, seen);
    return oscillator2_reduced(p);
  }
  throw IndexError("unknown model " + name);
}

std::vector<std::string> model_names() {
  return {"coulomb6", "coulomb3", "oscillator4", "oscillator2"};
}

}  // namespace superint

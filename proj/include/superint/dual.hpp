#pragma once

#include <cmath>

namespace superint {

// Forward-mode dual number a + b*eps with eps^2 = 0. Arithmetic on the value
// part carries the directional derivative in the dot part; one derivative
// direction per evaluation pass.
struct Dual {
  double val = 0.0;
  double dot = 0.0;

  Dual() = default;
  Dual(double v) : val(v) {}
  Dual(double v, double d) : val(v), dot(d) {}
};

inline Dual operator+(Dual a, Dual b) { return {a.val + b.val, a.dot + b.dot}; }
inline Dual operator-(Dual a, Dual b) { return {a.val - b.val, a.dot - b.dot}; }
inline Dual operator-(Dual a) { return {-a.val, -a.dot}; }
inline Dual operator*(Dual a, Dual b) {
  return {a.val * b.val, a.dot * b.val + a.val * b.dot};
}
inline Dual operator/(Dual a, Dual b) {
  const double inv = 1.0 / b.val;
  const double q = a.val * inv;
  return {q, (a.dot - q * b.dot) * inv};
}

inline Dual sqrt(Dual a) {
  const double r = std::sqrt(a.val);
  return {r, a.dot / (2.0 * r)};
}
inline Dual sin(Dual a) { return {std::sin(a.val), std::cos(a.val) * a.dot}; }
inline Dual cos(Dual a) { return {std::cos(a.val), -std::sin(a.val) * a.dot}; }

}  // namespace superint

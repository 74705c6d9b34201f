#pragma once

#include <complex>
#include <memory>
#include <unordered_map>
#include <vector>

#include "superint/dual.hpp"
#include "superint/errors.hpp"
#include "superint/phase.hpp"

namespace superint {

class FieldNode;
using NodePtr = std::shared_ptr<const FieldNode>;

class Field;
struct SubstContext {
  const std::vector<Field>* qsub;
  const std::vector<Field>* psub;
  std::unordered_map<const FieldNode*, NodePtr> memo;
};

// Expression-tree node. Nodes are immutable and shared between fields; the
// two eval overloads are the plain and the forward-mode derivative pass.
class FieldNode {
 public:
  virtual ~FieldNode() = default;
  virtual double eval(const double* q, const double* p) const = 0;
  virtual Dual eval(const Dual* q, const Dual* p) const = 0;
  virtual NodePtr substitute(SubstContext& ctx) const = 0;
};

// Real-valued observable on phase space, built from coordinate leaves by
// arithmetic, sqrt, sin, cos and integer powers. Evaluation throws
// DomainError when a guarded denominator comes within eps_domain of zero
// (points are rejected, never clamped). arity() is the phase-space half
// dimension N; constants have arity 0 and combine with anything.
class Field {
 public:
  Field();  // the zero field, arity 0

  static Field constant(double v);
  static Field q(int i, int arity);  // position coordinate, 0-based
  static Field p(int i, int arity);  // momentum coordinate, 0-based

  int arity() const { return arity_; }

  double operator()(const PhasePoint& x) const;

  // Chain-rule composition: replace each coordinate leaf q_i, p_i by the
  // corresponding entry of qsub / psub (all of one common arity).
  Field substituted(const std::vector<Field>& qsub,
                    const std::vector<Field>& psub) const;

  // Raw evaluation on packed buffers, no arity check. Used by the gradient
  // and bracket engines which own the buffers.
  double eval_raw(const double* q, const double* p) const;
  Dual eval_raw(const Dual* q, const Dual* p) const;

  // Internal: shared expression root.
  const NodePtr& node() const { return root_; }

  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);
  friend Field operator*(const Field& a, const Field& b);
  friend Field operator/(const Field& a, const Field& b);
  friend Field operator-(const Field& a);
  friend Field sqrt(const Field& a);
  friend Field sin(const Field& a);
  friend Field cos(const Field& a);
  friend Field pow(const Field& a, int n);

 private:
  Field(NodePtr root, int arity) : root_(std::move(root)), arity_(arity) {}
  static int merge_arity(int a, int b);

  NodePtr root_;
  int arity_ = 0;
};

inline Field operator+(const Field& a, double b) { return a + Field::constant(b); }
inline Field operator+(double a, const Field& b) { return Field::constant(a) + b; }
inline Field operator-(const Field& a, double b) { return a - Field::constant(b); }
inline Field operator-(double a, const Field& b) { return Field::constant(a) - b; }
inline Field operator*(const Field& a, double b) { return a * Field::constant(b); }
inline Field operator*(double a, const Field& b) { return Field::constant(a) * b; }
inline Field operator/(const Field& a, double b) { return a / Field::constant(b); }
inline Field operator/(double a, const Field& b) { return Field::constant(a) / b; }

// Complex observable stored as a pair of real fields.
struct ComplexField {
  Field re;
  Field im;

  ComplexField() = default;
  ComplexField(Field re_, Field im_) : re(std::move(re_)), im(std::move(im_)) {}
  static ComplexField from_real(Field f) { return {std::move(f), Field::constant(0.0)}; }

  std::complex<double> operator()(const PhasePoint& x) const {
    return {re(x), im(x)};
  }
};

inline ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  return {a.re + b.re, a.im + b.im};
}
inline ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  return {a.re - b.re, a.im - b.im};
}
inline ComplexField operator*(const ComplexField& a, const ComplexField& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexField operator*(double s, const ComplexField& a) {
  return {s * a.re, s * a.im};
}
inline ComplexField conj(const ComplexField& a) { return {a.re, -a.im}; }
inline Field norm2(const ComplexField& a) { return a.re * a.re + a.im * a.im; }

inline ComplexField pow(const ComplexField& a, int n) {
  if (n < 1) throw ParameterError("complex pow needs n >= 1");
  ComplexField acc = a;
  for (int i = 1; i < n; ++i) acc = acc * a;
  return acc;
}

// i * a
inline ComplexField itimes(const ComplexField& a) { return {-a.im, a.re}; }

}  // namespace superint

#include "superint/field.hpp"

#include <cmath>

namespace superint {

namespace {

using std::cos;
using std::sin;
using std::sqrt;

template <class Derived>
class NodeBase : public FieldNode {
 public:
  double eval(const double* q, const double* p) const final {
    return static_cast<const Derived*>(this)->template run<double>(q, p);
  }
  Dual eval(const Dual* q, const Dual* p) const final {
    return static_cast<const Derived*>(this)->template run<Dual>(q, p);
  }
};

class ConstNode final : public NodeBase<ConstNode> {
 public:
  explicit ConstNode(double v) : v_(v) {}
  template <class T>
  T run(const T*, const T*) const {
    return T(v_);
  }
  NodePtr substitute(SubstContext&) const override {
    return std::make_shared<ConstNode>(v_);
  }
  double value() const { return v_; }

 private:
  double v_;
};

class CoordNode final : public NodeBase<CoordNode> {
 public:
  CoordNode(bool is_p, int idx) : is_p_(is_p), idx_(idx) {}
  template <class T>
  T run(const T* q, const T* p) const {
    return is_p_ ? p[idx_] : q[idx_];
  }
  NodePtr substitute(SubstContext& ctx) const override {
    const auto& sub = is_p_ ? *ctx.psub : *ctx.qsub;
    if (idx_ >= static_cast<int>(sub.size()))
      throw DimensionError("substitution list shorter than coordinate index");
    return sub[idx_].node();
  }

 private:
  bool is_p_;
  int idx_;
};

template <class Derived>
class BinaryNode : public NodeBase<Derived> {
 public:
  BinaryNode(NodePtr a, NodePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  NodePtr substitute(SubstContext& ctx) const override {
    auto it = ctx.memo.find(this);
    if (it != ctx.memo.end()) return it->second;
    NodePtr r = std::make_shared<Derived>(a_->substitute(ctx), b_->substitute(ctx));
    ctx.memo.emplace(this, r);
    return r;
  }

 protected:
  NodePtr a_, b_;
};

template <class Derived>
class UnaryNode : public NodeBase<Derived> {
 public:
  explicit UnaryNode(NodePtr a) : a_(std::move(a)) {}
  NodePtr substitute(SubstContext& ctx) const override {
    auto it = ctx.memo.find(this);
    if (it != ctx.memo.end()) return it->second;
    NodePtr r = std::make_shared<Derived>(a_->substitute(ctx));
    ctx.memo.emplace(this, r);
    return r;
  }

 protected:
  NodePtr a_;
};

struct AddNode final : BinaryNode<AddNode> {
  using BinaryNode::BinaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    return a_->eval(q, p) + b_->eval(q, p);
  }
};

struct SubNode final : BinaryNode<SubNode> {
  using BinaryNode::BinaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    return a_->eval(q, p) - b_->eval(q, p);
  }
};

struct MulNode final : BinaryNode<MulNode> {
  using BinaryNode::BinaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    return a_->eval(q, p) * b_->eval(q, p);
  }
};

inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.val; }

struct DivNode final : BinaryNode<DivNode> {
  using BinaryNode::BinaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    T den = b_->eval(q, p);
    if (std::abs(value_of(den)) < eps_domain)
      throw DomainError("denominator within eps_domain of zero");
    return a_->eval(q, p) / den;
  }
};

struct NegNode final : UnaryNode<NegNode> {
  using UnaryNode::UnaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    return -a_->eval(q, p);
  }
};

struct SqrtNode final : UnaryNode<SqrtNode> {
  using UnaryNode::UnaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    T v = a_->eval(q, p);
    if (value_of(v) < eps_domain * eps_domain)
      throw DomainError("sqrt argument within eps_domain^2 of zero");
    return sqrt(v);
  }
};

struct SinNode final : UnaryNode<SinNode> {
  using UnaryNode::UnaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    return sin(a_->eval(q, p));
  }
};

struct CosNode final : UnaryNode<CosNode> {
  using UnaryNode::UnaryNode;
  template <class T>
  T run(const T* q, const T* p) const {
    return cos(a_->eval(q, p));
  }
};

class PowNode final : public NodeBase<PowNode> {
 public:
  PowNode(NodePtr a, int n) : a_(std::move(a)), n_(n) {}
  template <class T>
  T run(const T* q, const T* p) const {
    T base = a_->eval(q, p);
    T acc(1.0);
    int n = n_;
    while (n > 0) {
      if (n & 1) acc = acc * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return acc;
  }
  NodePtr substitute(SubstContext& ctx) const override {
    auto it = ctx.memo.find(this);
    if (it != ctx.memo.end()) return it->second;
    NodePtr r = std::make_shared<PowNode>(a_->substitute(ctx), n_);
    ctx.memo.emplace(this, r);
    return r;
  }

 private:
  NodePtr a_;
  int n_;
};

}  // namespace

Field::Field() : root_(std::make_shared<ConstNode>(0.0)), arity_(0) {}

Field Field::constant(double v) {
  return Field(std::make_shared<ConstNode>(v), 0);
}

Field Field::q(int i, int arity) {
  if (arity < 1) throw DimensionError("coordinate arity must be positive");
  if (i < 0 || i >= arity) throw IndexError("q index out of range");
  return Field(std::make_shared<CoordNode>(false, i), arity);
}

Field Field::p(int i, int arity) {
  if (arity < 1) throw DimensionError("coordinate arity must be positive");
  if (i < 0 || i >= arity) throw IndexError("p index out of range");
  return Field(std::make_shared<CoordNode>(true, i), arity);
}

int Field::merge_arity(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DimensionError("combining fields of different arity");
}

double Field::operator()(const PhasePoint& x) const {
  if (arity_ != 0 && x.dim() != arity_)
    throw DimensionError("point dimension does not match field arity");
  return root_->eval(x.q.data(), x.p.data());
}

double Field::eval_raw(const double* q, const double* p) const {
  return root_->eval(q, p);
}

Dual Field::eval_raw(const Dual* q, const Dual* p) const {
  return root_->eval(q, p);
}

Field Field::substituted(const std::vector<Field>& qsub,
                         const std::vector<Field>& psub) const {
  if (arity_ != 0) {
    if (static_cast<int>(qsub.size()) < arity_ ||
        static_cast<int>(psub.size()) < arity_)
      throw DimensionError("substitution lists shorter than field arity");
  }
  int target = 0;
  for (const Field& f : qsub) target = merge_arity(target, f.arity());
  for (const Field& f : psub) target = merge_arity(target, f.arity());
  SubstContext ctx{&qsub, &psub, {}};
  return Field(root_->substitute(ctx), target);
}

Field operator+(const Field& a, const Field& b) {
  return Field(std::make_shared<AddNode>(a.root_, b.root_),
               Field::merge_arity(a.arity_, b.arity_));
}
Field operator-(const Field& a, const Field& b) {
  return Field(std::make_shared<SubNode>(a.root_, b.root_),
               Field::merge_arity(a.arity_, b.arity_));
}
Field operator*(const Field& a, const Field& b) {
  return Field(std::make_shared<MulNode>(a.root_, b.root_),
               Field::merge_arity(a.arity_, b.arity_));
}
Field operator/(const Field& a, const Field& b) {
  return Field(std::make_shared<DivNode>(a.root_, b.root_),
               Field::merge_arity(a.arity_, b.arity_));
}
Field operator-(const Field& a) {
  return Field(std::make_shared<NegNode>(a.root_), a.arity_);
}
Field sqrt(const Field& a) {
  return Field(std::make_shared<SqrtNode>(a.root_), a.arity_);
}
Field sin(const Field& a) {
  return Field(std::make_shared<SinNode>(a.root_), a.arity_);
}
Field cos(const Field& a) {
  return Field(std::make_shared<CosNode>(a.root_), a.arity_);
}
Field pow(const Field& a, int n) {
  if (n == 0) return Field::constant(1.0);
  if (n < 0) return Field::constant(1.0) / pow(a, -n);
  if (n == 1) return a;
  return Field(std::make_shared<PowNode>(a.root_, n), a.arity_);
}

}  // namespace superint

#pragma once

#include <vector>

#include "lievf/coeffring.hpp"

namespace lievf {

/// f1*d/dx + f2*d/dy + f3*d/dz restricted to the first `dim` coordinates.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int dim);
  VectorField(int dim, std::vector<CoeffFn> components);

  /// Unit field d/dx_i (p, q, r for i = 0, 1, 2).
  static VectorField coordinate(int dim, int i);

  int dim() const { return static_cast<int>(comps_.size()); }
  const CoeffFn& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }
  CoeffFn& operator[](int i) { return comps_[static_cast<std::size_t>(i)]; }
  const std::vector<CoeffFn>& components() const { return comps_; }

  bool is_zero() const;
  /// Same field on a higher-dimensional space (new components zero).
  VectorField embedded(int new_dim) const;

  /// X(f) = sum_j X^j d_j f.
  CoeffFn apply(const CoeffFn& f) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator-(const VectorField& a);
  /// Multiplication by a coefficient function (f*X), not a module action.
  friend VectorField operator*(const CoeffFn& f, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  std::vector<CoeffFn> comps_;
};

/// X + phi: a first-order operator with a zero-order part, acting on f by X(f) + phi*f.
struct LiftedOperator {
  VectorField field;
  CoeffFn scalar;

  LiftedOperator() = default;
  explicit LiftedOperator(VectorField f, CoeffFn s = CoeffFn()) : field(std::move(f)), scalar(std::move(s)) {}

  int dim() const { return field.dim(); }
  friend bool operator==(const LiftedOperator& a, const LiftedOperator& b) {
    return a.field == b.field && a.scalar == b.scalar;
  }
};

VectorField bracket(const VectorField& x, const VectorField& y);
LiftedOperator op_bracket(const LiftedOperator& a, const LiftedOperator& b);
CoeffFn op_apply(const LiftedOperator& a, const CoeffFn& f);
std::vector<Rational> eval_field(const VectorField& x, const Point& pt);

}  // namespace lievf

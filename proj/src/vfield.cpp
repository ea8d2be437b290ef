#include "lievf/vfield.hpp"

#include <algorithm>
#include <string>

namespace lievf {

namespace {

void require_same_dim(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("fields of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

}  // namespace

VectorField::VectorField(int dim) : comps_(static_cast<std::size_t>(dim)) {
  if (dim < 1 || dim > 3) throw DimensionMismatch("vector field dimension must be 1, 2 or 3");
}

VectorField::VectorField(int dim, std::vector<CoeffFn> components) : comps_(std::move(components)) {
  if (dim < 1 || dim > 3 || static_cast<int>(comps_.size()) != dim)
    throw DimensionMismatch("component count does not match dimension " + std::to_string(dim));
}

VectorField VectorField::coordinate(int dim, int i) {
  VectorField v(dim);
  v[i] = CoeffFn(1);
  return v;
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const CoeffFn& c) { return c.is_zero(); });
}

VectorField VectorField::embedded(int new_dim) const {
  if (new_dim < dim()) throw DimensionMismatch("cannot embed into a smaller space");
  VectorField v(new_dim);
  for (int i = 0; i < dim(); ++i) v[i] = (*this)[i];
  return v;
}

CoeffFn VectorField::apply(const CoeffFn& f) const {
  CoeffFn r;
  for (int j = 0; j < dim(); ++j)
    if (!comps_[static_cast<std::size_t>(j)].is_zero())
      r += comps_[static_cast<std::size_t>(j)] * f.partial(static_cast<Axis>(j));
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField operator-(const VectorField& a) {
  VectorField r = a;
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField operator*(const CoeffFn& f, const VectorField& x) {
  VectorField r = x;
  for (auto& c : r.comps_) c *= f;
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  require_same_dim(x, y);
  VectorField r(x.dim());
  for (int k = 0; k < x.dim(); ++k) r[k] = x.apply(y[k]) - y.apply(x[k]);
  return r;
}

LiftedOperator op_bracket(const LiftedOperator& a, const LiftedOperator& b) {
  require_same_dim(a.field, b.field);
  return LiftedOperator(bracket(a.field, b.field), a.field.apply(b.scalar) - b.field.apply(a.scalar));
}

CoeffFn op_apply(const LiftedOperator& a, const CoeffFn& f) { return a.field.apply(f) + a.scalar * f; }

std::vector<Rational> eval_field(const VectorField& x, const Point& pt) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) v.push_back(x[i].eval(pt));
  return v;
}

}  // namespace lievf

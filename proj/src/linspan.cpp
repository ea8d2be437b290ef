#include "lievf/linspan.hpp"

#include <algorithm>
#include <string>

namespace lievf {

std::vector<CoeffFn::Factor> merge_denominators(const std::vector<CoeffFn::Factor>& a,
                                                const std::vector<CoeffFn::Factor>& b) {
  std::vector<CoeffFn::Factor> out = a;
  for (const auto& f : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CoeffFn::Factor& g) { return g.base == f.base; });
    if (it == out.end())
      out.push_back(f);
    else
      it->power = std::max(it->power, f.power);
  }
  std::sort(out.begin(), out.end(), [](const CoeffFn::Factor& x, const CoeffFn::Factor& y) { return x.base < y.base; });
  return out;
}

namespace {

std::vector<CoeffFn::Factor> field_denominators(const VectorField& x) {
  std::vector<CoeffFn::Factor> d;
  for (const auto& c : x.components()) d = merge_denominators(d, c.denominator_factors());
  return d;
}

bool covers(const std::vector<CoeffFn::Factor>& big, const std::vector<CoeffFn::Factor>& small) {
  return merge_denominators(big, small) == big;
}

}  // namespace

// ------------------------------------------------------------- SpannedAlgebra

KeyedEchelon<FlatKey>::Vec SpannedAlgebra::flatten(const VectorField& x,
                                                   const std::vector<CoeffFn::Factor>& den) const {
  KeyedEchelon<FlatKey>::Vec v;
  for (int c = 0; c < x.dim(); ++c) {
    if (x[c].is_zero()) continue;
    const Terms num = x[c].numerator_over(den);
    for (const auto& [m, coef] : num.map()) v.emplace(FlatKey{c, m}, coef);
  }
  return v;
}

void SpannedAlgebra::rebuild(std::vector<CoeffFn::Factor> den) {
  den_ = std::move(den);
  echelon_ = KeyedEchelon<FlatKey>();
  for (const auto& b : basis_) echelon_.insert(flatten(b, den_));
}

bool SpannedAlgebra::add(const VectorField& x, int source) {
  if (space_dim_ == 0) space_dim_ = x.dim();
  if (x.dim() != space_dim_)
    throw DimensionMismatch("field of dimension " + std::to_string(x.dim()) + " in a span of dimension " +
                            std::to_string(space_dim_));
  auto d = field_denominators(x);
  if (!covers(den_, d)) rebuild(merge_denominators(den_, d));
  if (!echelon_.insert(flatten(x, den_))) return false;
  basis_.push_back(x);
  source_.push_back(source < 0 ? static_cast<int>(basis_.size()) - 1 : source);
  structure_.clear();
  return true;
}

std::optional<RationalVector> SpannedAlgebra::coordinates(const VectorField& x) const {
  if (space_dim_ != 0 && x.dim() != space_dim_)
    throw DimensionMismatch("field of dimension " + std::to_string(x.dim()) + " in a span of dimension " +
                            std::to_string(space_dim_));
  if (x.is_zero()) return RationalVector(basis_.size(), Rational(0));
  auto d = field_denominators(x);
  if (covers(den_, d)) return echelon_.coordinates(flatten(x, den_));
  SpannedAlgebra wider = *this;
  wider.rebuild(merge_denominators(den_, d));
  return wider.echelon_.coordinates(wider.flatten(x, wider.den_));
}

VectorField SpannedAlgebra::combination(const RationalVector& coords) const {
  VectorField r(space_dim_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) r += CoeffFn(coords[i]) * basis_[i];
  return r;
}

SpannedAlgebra span_reduce(const std::vector<VectorField>& fields) {
  SpannedAlgebra a(fields.empty() ? 0 : fields.front().dim());
  for (std::size_t i = 0; i < fields.size(); ++i) a.add(fields[i], static_cast<int>(i));
  return a;
}

std::optional<RationalVector> span_contains(const SpannedAlgebra& a, const VectorField& x) {
  return a.coordinates(x);
}

namespace {

struct BracketMiss {
  int i = -1;
  int j = -1;
  VectorField bracket_field;
};

/// Structure constants of a span, or the first basis pair whose bracket leaves it.
std::optional<StructureConstants> structure_of(const SpannedAlgebra& a, BracketMiss& miss) {
  const auto n = static_cast<std::size_t>(a.dim());
  StructureConstants c(n, std::vector<RationalVector>(n, RationalVector(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField b = bracket(a[static_cast<int>(i)], a[static_cast<int>(j)]);
      auto coords = a.coordinates(b);
      if (!coords) {
        miss = {static_cast<int>(i), static_cast<int>(j), std::move(b)};
        return std::nullopt;
      }
      for (std::size_t k = 0; k < n; ++k) {
        c[i][j][k] = (*coords)[k];
        c[j][i][k] = -(*coords)[k];
      }
    }
  return c;
}

}  // namespace

SpannedAlgebra lie_closure(const std::vector<VectorField>& generators) {
  SpannedAlgebra a = span_reduce(generators);
  BracketMiss miss;
  auto c = structure_of(a, miss);
  if (!c) {
    int gi = a.source_index()[static_cast<std::size_t>(miss.i)];
    int gj = a.source_index()[static_cast<std::size_t>(miss.j)];
    throw ClosureFailure(gi, gj, miss.bracket_field,
                         "bracket of generators " + std::to_string(gi) + " and " + std::to_string(gj) +
                             " is not in the span");
  }
  a.set_structure(std::move(*c));
  return a;
}

SpannedAlgebra lie_saturate(const std::vector<VectorField>& generators, int cap) {
  SpannedAlgebra a = span_reduce(generators);
  BracketMiss miss;
  std::optional<StructureConstants> c;
  while (!(c = structure_of(a, miss))) {
    a.add(miss.bracket_field);
    if (a.dim() > cap) throw Error("saturation exceeded the dimension cap " + std::to_string(cap));
  }
  a.set_structure(std::move(*c));
  return a;
}

// --------------------------------------------------------------- FunctionSpan

FunctionSpan::FunctionSpan(const std::vector<CoeffFn>& fns) {
  for (const auto& f : fns) add(f);
}

KeyedEchelon<ExpMonomial>::Vec FunctionSpan::flatten(const CoeffFn& f,
                                                    const std::vector<CoeffFn::Factor>& den) const {
  KeyedEchelon<ExpMonomial>::Vec v;
  if (f.is_zero()) return v;
  const Terms num = f.numerator_over(den);
  for (const auto& [m, c] : num.map()) v.emplace(m, c);
  return v;
}

void FunctionSpan::rebuild(std::vector<CoeffFn::Factor> den) {
  den_ = std::move(den);
  echelon_ = KeyedEchelon<ExpMonomial>();
  for (const auto& b : basis_) echelon_.insert(flatten(b, den_));
}

bool FunctionSpan::add(const CoeffFn& f) {
  if (!covers(den_, f.denominator_factors())) rebuild(merge_denominators(den_, f.denominator_factors()));
  if (!echelon_.insert(flatten(f, den_))) return false;
  basis_.push_back(f);
  return true;
}

std::optional<RationalVector> FunctionSpan::coordinates(const CoeffFn& f) const {
  if (f.is_zero()) return RationalVector(basis_.size(), Rational(0));
  if (covers(den_, f.denominator_factors())) return echelon_.coordinates(flatten(f, den_));
  FunctionSpan wider = *this;
  wider.rebuild(merge_denominators(den_, f.denominator_factors()));
  return wider.echelon_.coordinates(wider.flatten(f, wider.den_));
}

}  // namespace lievf

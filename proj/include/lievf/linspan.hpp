#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lievf/coeffring.hpp"
#include "lievf/linalg.hpp"
#include "lievf/vfield.hpp"

namespace lievf {

/// Sparse vectors over an ordered key set, kept fully reduced with pivot = greatest key.
/// Every stored row remembers its expansion in the inserted (independent) vectors.
template <class Key>
class KeyedEchelon {
 public:
  using Vec = std::map<Key, Rational>;

  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Coordinates of v in the independent inserted vectors, or nullopt if v is not in the span.
  std::optional<RationalVector> coordinates(const Vec& v) const {
    RationalVector coords(static_cast<std::size_t>(rank()), Rational(0));
    Vec residual = reduce(v, coords);
    if (!residual.empty()) return std::nullopt;
    return coords;
  }

  /// Inserts v; returns false (and stores nothing) when v is already in the span.
  bool insert(const Vec& v) {
    const std::size_t n = static_cast<std::size_t>(rank());
    RationalVector coords(n + 1, Rational(0));
    Vec residual = reduce(v, coords);
    if (residual.empty()) return false;
    // residual = v - sum coords_k * (inserted_k)
    RationalVector transform(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) transform[i] = -coords[i];
    transform[n] = 1;
    const Key lead = residual.rbegin()->first;
    const Rational inv = 1 / residual.rbegin()->second;
    for (auto& kv : residual) kv.second *= inv;
    for (auto& t : transform) t *= inv;
    for (auto& [k, row] : pivots_) {
      row.transform.resize(n + 1, Rational(0));
      auto it = row.vec.find(lead);
      if (it == row.vec.end()) continue;
      Rational c = it->second;
      axpy(row.vec, -c, residual);
      for (std::size_t i = 0; i <= n; ++i) row.transform[i] -= c * transform[i];
    }
    pivots_.emplace(lead, Row{std::move(residual), std::move(transform)});
    return true;
  }

 private:
  struct Row {
    Vec vec;
    RationalVector transform;
  };

  static void axpy(Vec& a, const Rational& c, const Vec& b) {
    for (const auto& [k, v] : b) {
      auto [it, inserted] = a.try_emplace(k, c * v);
      if (!inserted) {
        it->second += c * v;
        if (it->second == 0) a.erase(it);
      }
    }
  }

  Vec reduce(Vec v, RationalVector& coords) const {
    for (const auto& [k, row] : pivots_) {
      auto it = v.find(k);
      if (it == v.end()) continue;
      Rational c = it->second;
      axpy(v, -c, row.vec);
      for (std::size_t i = 0; i < row.transform.size(); ++i) coords[i] += c * row.transform[i];
    }
    return v;
  }

  std::map<Key, Row> pivots_;
};

/// Key of the flattened coordinate space of vector fields: (component, monomial).
struct FlatKey {
  int component = 0;
  ExpMonomial mono;
  friend bool operator==(const FlatKey&, const FlatKey&) = default;
  friend std::strong_ordering operator<=>(const FlatKey& a, const FlatKey& b) {
    if (auto c = a.component <=> b.component; c != 0) return c;
    return a.mono <=> b.mono;
  }
};

/// c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k.
using StructureConstants = std::vector<std::vector<RationalVector>>;

struct ClosureFailure : Error {
  int i;
  int j;
  VectorField bracket_field;
  ClosureFailure(int i_, int j_, VectorField b, const std::string& what)
      : Error(what), i(i_), j(j_), bracket_field(std::move(b)) {}
};

/// Finite-dimensional span of vector fields. The basis is the maximal independent subsequence of
/// the input, in input order; membership runs over numerators cleared by a common denominator.
class SpannedAlgebra {
 public:
  SpannedAlgebra() = default;
  explicit SpannedAlgebra(int space_dim) : space_dim_(space_dim) {}

  int space_dim() const { return space_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<VectorField>& basis() const { return basis_; }
  const VectorField& operator[](int i) const { return basis_[static_cast<std::size_t>(i)]; }
  /// Index of each basis element in the list it was reduced from.
  const std::vector<int>& source_index() const { return source_; }

  bool has_structure() const { return !structure_.empty() || basis_.empty(); }
  const StructureConstants& structure() const { return structure_; }

  /// Appends x if it is independent of the current basis; returns whether it was added.
  bool add(const VectorField& x, int source = -1);
  std::optional<RationalVector> coordinates(const VectorField& x) const;
  VectorField combination(const RationalVector& coords) const;

  void set_structure(StructureConstants c) { structure_ = std::move(c); }

 private:
  KeyedEchelon<FlatKey>::Vec flatten(const VectorField& x, const std::vector<CoeffFn::Factor>& den) const;
  void rebuild(std::vector<CoeffFn::Factor> den);

  int space_dim_ = 0;
  std::vector<VectorField> basis_;
  std::vector<int> source_;
  std::vector<CoeffFn::Factor> den_;
  KeyedEchelon<FlatKey> echelon_;
  StructureConstants structure_;
};

SpannedAlgebra span_reduce(const std::vector<VectorField>& fields);
std::optional<RationalVector> span_contains(const SpannedAlgebra& a, const VectorField& x);

/// Closed span of exactly the generators, with structure constants; throws ClosureFailure.
SpannedAlgebra lie_closure(const std::vector<VectorField>& generators);
/// Bracket-and-reduce to a fixpoint; throws Error once the dimension exceeds `cap`.
SpannedAlgebra lie_saturate(const std::vector<VectorField>& generators, int cap = 64);

/// Coordinates of functions in the span of a list of functions (common denominator cleared).
class FunctionSpan {
 public:
  FunctionSpan() = default;
  explicit FunctionSpan(const std::vector<CoeffFn>& fns);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<CoeffFn>& basis() const { return basis_; }
  bool add(const CoeffFn& f);
  std::optional<RationalVector> coordinates(const CoeffFn& f) const;

 private:
  KeyedEchelon<ExpMonomial>::Vec flatten(const CoeffFn& f, const std::vector<CoeffFn::Factor>& den) const;
  void rebuild(std::vector<CoeffFn::Factor> den);

  std::vector<CoeffFn> basis_;
  std::vector<CoeffFn::Factor> den_;
  KeyedEchelon<ExpMonomial> echelon_;
};

/// Union of factor lists keeping the larger power per base.
std::vector<CoeffFn::Factor> merge_denominators(const std::vector<CoeffFn::Factor>& a,
                                                const std::vector<CoeffFn::Factor>& b);

}  // namespace lievf

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lievf/linalg.hpp"
#include "lievf/linspan.hpp"

namespace lievf {

/// Row space in Q^n kept in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace full(int n);
  static Subspace span(int ambient, const std::vector<RationalVector>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<RationalVector>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& s) const;
  /// Coordinates of v in basis(), if v lies in the space.
  std::optional<RationalVector> coordinates(const RationalVector& v) const;
  /// Functionals (as vectors) spanning the annihilator.
  std::vector<RationalVector> annihilator() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.rows_ == b.rows_; }

 private:
  int ambient_ = 0;
  std::vector<RationalVector> rows_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

/// Lie algebra given by structure constants in a fixed basis e_0..e_{n-1}.
class AbstractLieAlgebra {
 public:
  AbstractLieAlgebra() = default;
  AbstractLieAlgebra(int dim, StructureConstants c) : dim_(dim), c_(std::move(c)) {}
  explicit AbstractLieAlgebra(const SpannedAlgebra& a) : dim_(a.dim()), c_(a.structure()) {}

  int dim() const { return dim_; }
  const StructureConstants& structure() const { return c_; }
  const Rational& c(int i, int j, int k) const {
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }

  RationalVector bracket(const RationalVector& u, const RationalVector& v) const;
  /// Matrix of ad(u): column j = [u, e_j].
  QMatrix ad(const RationalVector& u) const;
  QMatrix ad_basis(int i) const;
  RationalVector unit(int i) const;

  /// Empty when antisymmetry and Jacobi hold; otherwise a description of the first violation.
  std::optional<std::string> check_identities() const;

  /// Structure constants of a subalgebra in the given subspace basis. Throws Error if not closed.
  AbstractLieAlgebra restrict_to(const Subspace& s) const;

 private:
  int dim_ = 0;
  StructureConstants c_;
};

Subspace bracket_space(const AbstractLieAlgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const AbstractLieAlgebra& g, const Subspace& s);
bool is_ideal(const AbstractLieAlgebra& g, const Subspace& s);
bool is_abelian(const AbstractLieAlgebra& g, const Subspace& s);

struct SubspaceChain {
  std::vector<Subspace> terms;  // terms[0] = g; stops at the first repeat
  bool reaches_zero() const { return terms.back().is_zero(); }
  std::vector<int> dims() const;
};

SubspaceChain derived_series(const AbstractLieAlgebra& g);
SubspaceChain lower_central_series(const AbstractLieAlgebra& g);
bool is_solvable(const AbstractLieAlgebra& g);
bool is_nilpotent(const AbstractLieAlgebra& g);
Subspace center(const AbstractLieAlgebra& g);

QMatrix killing_matrix(const AbstractLieAlgebra& g);
bool is_semisimple(const AbstractLieAlgebra& g);

/// Maximal ideal of g contained in s (fixpoint of a -> {x in a : [g, x] in a}).
Subspace largest_ideal_in(const AbstractLieAlgebra& g, const Subspace& s);

/// Orthogonal complement of [g,g] for the Killing form. In characteristic zero with exact
/// arithmetic this is the solvable radical.
Subspace radical(const AbstractLieAlgebra& g);

/// Isomorphism invariants: dimension, derived series dims, Killing rank, center dimension.
struct AlgebraSignature {
  int dim = 0;
  std::vector<int> derived_dims;
  int killing_rank = 0;
  int center_dim = 0;
  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};
AlgebraSignature signature(const AbstractLieAlgebra& g);

/// Quotient g/a by an ideal, in the basis of complement unit vectors (non-pivot columns of a).
AbstractLieAlgebra quotient(const AbstractLieAlgebra& g, const Subspace& ideal);

}  // namespace lievf

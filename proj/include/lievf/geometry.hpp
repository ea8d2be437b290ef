#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lievf/algstruct.hpp"
#include "lievf/linspan.hpp"
#include "lievf/poly.hpp"

namespace lievf {

/// Evaluation candidates in the order they are tried.
const std::vector<Point>& base_point_candidates();

int transitivity_rank(const SpannedAlgebra& a, const Point& pt);

/// g0 at a point and its action on g/g0. g/g0 is identified with the image of evaluation, with
/// basis the evaluations of the algebra basis elements at `complement`.
struct IsotropyData {
  Point base_point{};
  int rank = 0;
  Subspace isotropy;                 // in algebra coordinates
  std::vector<int> complement;       // algebra basis indices spanning g mod g0
  QMatrix projection;                // rank x dim(g): coordinates of w + g0
  std::vector<QMatrix> rep_matrices; // one per isotropy basis vector
};

/// Chooses the first candidate point of maximal evaluation rank. Throws NoGoodPoint when no
/// candidate can be evaluated.
IsotropyData isotropy_at(const SpannedAlgebra& a);
IsotropyData isotropy_at(const SpannedAlgebra& a, const Point& pt);

/// Line spanned by a vector over Q(sqrt d) (d = 0 for rational lines).
struct QuadLine {
  std::vector<QuadNumber> direction;
  Integer d;
};

struct LineReport {
  int n = 0;
  std::vector<RationalVector> rational_lines;
  std::vector<QuadLine> quadratic_lines;
  /// Subspaces of dimension >= 2 on which every matrix is scalar: every line inside is invariant.
  std::vector<Subspace> families;
  std::vector<std::string> unresolved;
  /// Set when no line was found and the minors system was shown to have no solution.
  bool empty_certified = false;
  std::string certificate;

  bool has_lines() const { return !rational_lines.empty() || !quadratic_lines.empty() || !families.empty(); }
  bool complete() const { return unresolved.empty() || empty_certified; }
};

LineReport invariant_lines(const std::vector<QMatrix>& mats);

/// For n <= 3: decides by resultant elimination whether the 2x2 minors of (v | M_i v) have a common
/// projective zero over the algebraic closure. Returns the certificate text when they have none.
std::optional<std::string> certify_no_common_line(const std::vector<QMatrix>& mats);

enum class FoliationCase { B, C1, C2, D };
std::string to_string(FoliationCase c);

struct FoliationReport {
  FoliationCase tag = FoliationCase::B;
  Subspace ideal;            // a, in algebra coordinates
  RationalVector line;       // W in g/g0 coordinates
  bool ideal_abelian = false;
  std::optional<Rational> scaling_eigenvalue;  // C2: ad(h) on [a,a]
  int ideal_killing_rank = 0;
  int quotient_dim = 0;      // dim g/a
  int quotient_sub_dim = 0;  // dim p/a
};

/// `tangent` is a tangent vector at the isotropy base point spanning the invariant line W.
FoliationReport classify_foliation(const SpannedAlgebra& a, const IsotropyData& iso, const RationalVector& tangent);

/// True when the line through `tangent` is invariant under the isotropy representation.
bool is_invariant_tangent(const IsotropyData& iso, const SpannedAlgebra& a, const RationalVector& tangent);

}  // namespace lievf

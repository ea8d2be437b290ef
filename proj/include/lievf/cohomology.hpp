#pragma once

// Relative Chevalley-Eilenberg cohomology of pairs with modules, extensions of pairs, and the
// invariant-cocycle solver for the sl(2) ⋉ V family acting on W_p.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lievf/algstruct.hpp"
#include "lievf/catalog.hpp"
#include "lievf/linalg.hpp"
#include "lievf/verify.hpp"
#include "lievf/vfield.hpp"

namespace lievf {

struct NotClosedUnderAction : Error {
  int op;
  CoeffFn function;
  CoeffFn image;
  NotClosedUnderAction(int op_, CoeffFn f, CoeffFn img, const std::string& what)
      : Error(what), op(op_), function(std::move(f)), image(std::move(img)) {}
};

struct NotACocycle : Error {
  int i, j, k;
  NotACocycle(int i_, int j_, int k_, const std::string& what) : Error(what), i(i_), j(j_), k(k_) {}
};

/// g with a subalgebra g0 spanned by the first d0 basis vectors.
struct PairOfAlgebras {
  AbstractLieAlgebra algebra;
  int d0 = 0;
  /// Column a holds basis vector a in the coordinates the pair was built from.
  QMatrix basis;

  int dim() const { return algebra.dim(); }
  bool is_effective() const;
};

/// ρ: g -> gl(V) in the adapted bases; V0 is spanned by the first dim_v0 basis vectors of V.
struct PairModule {
  int dim_v = 0;
  int dim_v0 = 0;
  std::vector<QMatrix> action;
  /// Column t holds basis vector t of V in the coordinates of the input function list.
  QMatrix basis;

  /// Empty when ρ is a representation and V0 is g0-stable; otherwise the first violation.
  std::optional<std::string> check(const PairOfAlgebras& pair) const;
  /// Dimension of the largest ρ(g)-submodule inside V0.
  int largest_submodule_in_v0() const;
};

struct PairAndModule {
  PairOfAlgebras pair;
  PairModule module;
  SpannedAlgebra planar;
};

/// Pair from the span of the operator fields at `base_point`; module from the action of the
/// operators on span(functions) with V0 = {f : f(base_point) = 0}. Throws NotClosedUnderAction.
PairAndModule build_pair_module_from_bundle(const std::vector<LiftedOperator>& operators,
                                            const std::vector<CoeffFn>& functions, const Point& base_point);

/// Cochains of degree n: for each increasing n-tuple of g-basis indices and each V-basis index.
struct RelativeComplex {
  int d = 0, d0 = 0, dim_v = 0, dim_v0 = 0;
  /// Dimensions of C^n(g, g0, V, V0) for n = 0..3.
  std::vector<int> dims;
  /// Ranks of d_n : C^n -> C^{n+1} for n = 0..2.
  std::vector<int> ranks;
  /// d_{n+1} ∘ d_n = 0 for n = 0, 1.
  bool dd_zero = true;
  /// d_n maps relative cochains to relative cochains.
  bool subcomplex = true;
  /// Kernel of d_2 modulo image of d_1, as cochain vectors in the full C^2 coordinates.
  std::vector<std::vector<Rational>> h2_representatives;

  std::vector<int> cohomology() const;
};

RelativeComplex relative_complex(const PairOfAlgebras& pair, const PairModule& module);

/// (h0, h1, h2).
std::vector<int> cohomology_dims(const PairOfAlgebras& pair, const PairModule& module);

/// dim H^1(g0, V/V0) by the ordinary complex. Throws NotSemisimple unless the Killing form of g
/// is nondegenerate.
int h1_quotient_shortcut(const PairOfAlgebras& pair, const PairModule& module);

/// dim C^n(g, V) = dim C^n(g, g0, V, V0) + dim C^n(g0, V/V0) for n = 0..3, with the relative
/// dimension taken from the constructed complex.
bool exactness_dim_check(const PairOfAlgebras& pair, const PairModule& module);

/// Index of the C^2 coordinate for (i < j, t).
int cochain2_index(int d, int dim_v, int i, int j, int t);

/// g ⊕ V with [x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u + ω(x,y); subalgebra g0 ⊕ V0 (basis: g0, V0,
/// rest of g, rest of V). Throws NotACocycle with the first failing Jacobi triple.
PairOfAlgebras build_extension(const PairOfAlgebras& pair, const PairModule& module,
                               const std::vector<Rational>& cocycle);

/// Isomorphism of an extension (in the order g, V of its pair) onto a realization whose first
/// dim g generators lift g and whose remaining generators span the module. The map is
/// e_a -> sum_i B_ia F_i + sum_s phi_as R_s, v_t -> sum_s C_ts R_s, with g0 ⊕ V0 sent into the
/// isotropy at the base point.
struct ExtensionMatch {
  bool found = false;
  std::vector<std::vector<Rational>> phi;
  QMatrix c;
  std::string detail;
};
ExtensionMatch match_extension(const PairOfAlgebras& pair, const PairModule& module,
                               const std::vector<Rational>& cocycle, const SpannedAlgebra& realization,
                               const Point& base_point);

/// Result of the invariant-cocycle solver.
struct Case13Solution {
  int n = 0, p = 0, m = 0;
  int dimension = 0;
  /// a^{ij}_k for i < j in lexicographic order, k = 0..m-pn; normalized so the first nonzero entry is 1.
  std::vector<Rational> cocycle;
  /// Set when dimension == 1: the installed bracket passes the full Jacobi check.
  std::optional<bool> jacobi_ok;
  /// Set when dimension == 1: the solved cocycle equals the binomial closed form at k = i+j-1.
  std::optional<bool> closed_form_ok;
};
Case13Solution case13_cocycle_space(int n, int p, int m);

// ------------------------------------------------------------------ the cases

struct Expectation {
  bool module_closed = true;
  int h2 = 0;
};

struct CohomologyCase {
  std::string id;
  std::string params_doc;
  bool semisimple = false;
  std::function<void(const Params&)> validate;
  std::function<std::vector<LiftedOperator>(const Params&)> operators;
  std::function<std::vector<CoeffFn>(const Params&)> module;
  std::function<Expectation(const Params&)> expected;
  std::function<std::vector<Params>()> grid;
};

const std::vector<CohomologyCase>& cohomology_cases();
const CohomologyCase& find_case(std::string_view id);

struct CohomologyReport {
  std::string case_id;
  std::string params;
  std::vector<int> dims;
  std::optional<int> expected;
  std::vector<Check> checks;

  bool match() const { return expected && dims.size() == 3 && dims[2] == *expected; }
  bool pass() const;
};

CohomologyReport run_case(const CohomologyCase& c, const Params& params);

}  // namespace lievf

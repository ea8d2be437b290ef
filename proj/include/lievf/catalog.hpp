#pragma once

// Parameterized constructors for the classification entries and their submodule families.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lievf/coeffring.hpp"
#include "lievf/errors.hpp"
#include "lievf/poly.hpp"
#include "lievf/vfield.hpp"

namespace lievf {

/// Monic polynomial p(t) with all roots rational, kept as (root, multiplicity) in increasing root order.
struct RootPoly {
  std::vector<std::pair<Rational, int>> roots;

  int degree() const;
  UPoly expand() const;
  /// Text such as "t^2", "t(t-1)", "(t-1)(t-2)".
  std::string to_string() const;
  /// Parses products of "t", "(t-a)", "(t+a)" with optional "^k".
  static RootPoly parse(std::string_view text);
  friend bool operator==(const RootPoly&, const RootPoly&) = default;
};

/// Entry or family parameters. Absent names are absent, not zero.
struct Params {
  std::map<std::string, Rational> num;
  std::vector<int> ms;  // strictly increasing m_1 < ... < m_k
  std::optional<RootPoly> pt;

  bool has(const std::string& name) const { return num.count(name) != 0; }
  const Rational& at(const std::string& name) const;
  /// Integer parameter; BadParams if absent or not an integer.
  long integer(const std::string& name) const;

  /// Canonical "k=v" list sorted by name; the inverse of parse.
  std::string to_string() const;
  /// "n=1,m=2,ms=0;2,pt=t(t-1),alpha=1/2". Throws BadParams.
  static Params parse(std::string_view text);
  friend bool operator==(const Params&, const Params&) = default;
};

enum class Series { Planar, P, A, B, C, D };
std::string to_string(Series s);

/// What the foliation check expects of an entry in 3-space.
enum class Shape { Planar, NoInvariantLine, B, C1, C2, D };
std::string to_string(Shape s);

enum class Grid { Small, Full };

struct Erratum {
  std::string verbatim;   // printed generator text that is wrong
  std::string corrected;  // what the builder uses instead
  /// True when the verbatim form differs only in notation and builds the same algebra.
  bool notation_only = false;
  /// Exact failure text of the verbatim form at `witness_params` (empty for notation-only errata).
  std::string witness;
  std::string witness_params;
};

struct CatalogEntry {
  std::string id;
  Series series = Series::Planar;
  int space_dim = 3;
  std::string params_doc;
  bool solvable = false;
  Shape shape = Shape::Planar;
  std::optional<Erratum> erratum;

  std::function<void(const Params&)> validate;
  std::function<std::vector<VectorField>(const Params&, bool verbatim)> build;
  std::function<int(const Params&)> expected_dim;
  std::function<std::vector<Params>(Grid)> grid;
};

/// All entries in catalog order.
const std::vector<CatalogEntry>& catalog();
/// Throws UnknownEntry.
const CatalogEntry& find_entry(std::string_view id);

/// Validates and builds. The corrected form is the default.
std::vector<VectorField> construct_entry(std::string_view id, const Params& params, bool verbatim = false);

/// Planar generators raised to 3-space, followed by r, z r, z^2 r.
std::vector<VectorField> dseries_lift(std::string_view planar_id, const Params& params);

/// Rodrigues formula (-1)^n / (2^n n!) d^n/dz^n (1 - z^2)^n.
UPoly legendre(int n);

enum class FamilyKind {
  Vm,            // x^i e^{m y}, i <= m
  Vnm,           // d^i/dx^i (x^{n+m} (1+xy)^m), i <= n+2m
  Valpha,        // x^i e^{(m+alpha) y}, i <= m (operator convention)
  ValphaDual,    // x^i e^{(m-alpha) y}, i <= m (field-realization convention)
  Vpt,           // solutions of p(d/dx) f = 0; "axis" = 1 switches to y
  XiVpt,         // x^i f(y), i <= m, f in V_{p(t)} in y
  Vnmp,          // x^i y^j, j <= p, i <= m - j n
  Case18,        // x^i y^j, j <= p, i <= alpha + n (beta - j)
  TotalDegree,   // x^i y^j, i + j <= m
  LegendrePlus,  // saturation of P_n((x^2+y^2-1)/(x^2+y^2+1)) under the compact planar algebra
  LegendreMinus, // saturation of P_n((x^2+y^2+1)/(x^2+y^2-1)) under the hyperbolic planar algebra
  Ball,          // x^i y^j (x^2+y^2)^k, i + j + k <= alpha
};
std::string to_string(FamilyKind k);

struct SubmoduleFamily {
  FamilyKind kind = FamilyKind::Vm;
  Params params;
  std::vector<CoeffFn> basis;
};

/// Independent basis of one family. Throws BadParams.
SubmoduleFamily submodule_family(FamilyKind kind, const Params& params);
/// Concatenated bases for the list params.ms, with the list value bound to "m" (Legendre: "n").
std::vector<CoeffFn> family_sum(FamilyKind kind, const Params& params);
/// Closed-form dimension of one family.
int family_dim(FamilyKind kind, const Params& params);
/// Closed-form dimension of family_sum.
int family_sum_dim(FamilyKind kind, const Params& params);

/// Default grid for the sweeps.
std::vector<RootPoly> grid_polys();
std::vector<Rational> grid_alphas();
std::vector<std::vector<int>> grid_mlists(Grid g);

}  // namespace lievf

#include "lievf/geometry.hpp"

#include <sstream>

#include "lievf/coeffring.hpp"

namespace lievf {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

QMatrix evaluation_matrix(const SpannedAlgebra& a, const Point& pt) {
  QMatrix e(a.space_dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) e.set_col(j, eval_field(a[j], pt));
  return e;
}

}  // namespace

const std::vector<Point>& base_point_candidates() {
  static const std::vector<Point> pts = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 3}, {1, -1, 2},
  };
  return pts;
}

int transitivity_rank(const SpannedAlgebra& a, const Point& pt) {
  if (a.dim() == 0) return 0;
  return rank(evaluation_matrix(a, pt));
}

IsotropyData isotropy_at(const SpannedAlgebra& a, const Point& pt) {
  IsotropyData d;
  d.base_point = pt;
  const int n = a.dim();
  QMatrix e = evaluation_matrix(a, pt);
  Rref<Rational> r = rref(e);
  d.rank = r.rank();
  d.complement = r.pivots;
  d.projection = QMatrix(d.rank, n);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < n; ++j) d.projection(i, j) = r.reduced(i, j);
  d.isotropy = Subspace::span(n, kernel(e));
  AbstractLieAlgebra g(a);
  for (const auto& x : d.isotropy.basis()) {
    QMatrix rho(d.rank, d.rank);
    for (int j = 0; j < d.rank; ++j)
      rho.set_col(j, d.projection.apply(g.bracket(x, g.unit(d.complement[idx(j)]))));
    d.rep_matrices.push_back(std::move(rho));
  }
  return d;
}

IsotropyData isotropy_at(const SpannedAlgebra& a) {
  int best_rank = -1;
  const Point* best = nullptr;
  for (const auto& pt : base_point_candidates()) {
    int r;
    try {
      r = transitivity_rank(a, pt);
    } catch (const DenominatorVanishes&) {
      continue;
    } catch (const NonRationalExponential&) {
      continue;
    }
    if (r > best_rank) {
      best_rank = r;
      best = &pt;
    }
  }
  if (!best) throw NoGoodPoint("no candidate base point can be evaluated");
  return isotropy_at(a, *best);
}

// ------------------------------------------------------------ invariant lines

namespace {

template <class T>
bool parallel(const std::vector<T>& v, const std::vector<T>& w) {
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!(v[a] * w[b] - v[b] * w[a] == 0)) return false;
  return true;
}

/// Matrix of M restricted to a stable subspace F, in the basis F.basis().
QMatrix restrict_matrix(const QMatrix& m, const Subspace& f) {
  const int k = f.dim();
  QMatrix r(k, k);
  for (int j = 0; j < k; ++j) {
    auto c = f.coordinates(m.apply(f.basis()[idx(j)]));
    if (!c) throw Error("subspace is not stable");
    r.set_col(j, *c);
  }
  return r;
}

bool is_scalar(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j ? m(i, j) != 0 : m(i, i) != m(0, 0)) return false;
  return true;
}

/// Largest subspace of `e` mapped into itself by every matrix.
Subspace largest_stable_in(const std::vector<QMatrix>& mats, Subspace e) {
  while (!e.is_zero()) {
    const auto ann = e.annihilator();
    if (ann.empty()) return e;
    std::vector<RationalVector> rows;
    for (const auto& m : mats) {
      std::vector<RationalVector> images;
      for (const auto& u : e.basis()) images.push_back(m.apply(u));
      for (const auto& f : ann) {
        RationalVector row(idx(e.dim()), Rational(0));
        for (int i = 0; i < e.dim(); ++i)
          for (int c = 0; c < e.ambient(); ++c) row[idx(i)] += f[idx(c)] * images[idx(i)][idx(c)];
        rows.push_back(std::move(row));
      }
    }
    std::vector<RationalVector> keep;
    for (const auto& t : kernel(QMatrix::from_rows(rows, e.dim()))) {
      RationalVector v(idx(e.ambient()), Rational(0));
      for (int i = 0; i < e.dim(); ++i)
        for (int c = 0; c < e.ambient(); ++c) v[idx(c)] += t[idx(i)] * e.basis()[idx(i)][idx(c)];
      keep.push_back(std::move(v));
    }
    Subspace next = Subspace::span(e.ambient(), keep);
    if (next.dim() == e.dim()) return e;
    e = std::move(next);
  }
  return e;
}

void search(const std::vector<QMatrix>& mats, const Subspace& f, LineReport& out) {
  if (f.is_zero()) return;
  std::vector<QMatrix> restricted;
  for (const auto& m : mats) restricted.push_back(restrict_matrix(m, f));
  const QMatrix* split = nullptr;
  for (const auto& r : restricted)
    if (!is_scalar(r)) {
      split = &r;
      break;
    }
  if (!split) {
    if (f.dim() == 1)
      out.rational_lines.push_back(f.basis()[0]);
    else
      out.families.push_back(f);
    return;
  }
  const int k = f.dim();
  auto lift = [&](const RationalVector& c) {
    RationalVector v(idx(f.ambient()), Rational(0));
    for (int i = 0; i < k; ++i)
      for (int a = 0; a < f.ambient(); ++a) v[idx(a)] += c[idx(i)] * f.basis()[idx(i)][idx(a)];
    return v;
  };
  UPoly cp = characteristic_polynomial(*split);
  RationalFactorization fac = split_rational_roots(cp);
  for (const auto& [lambda, mult] : fac.roots) {
    std::vector<RationalVector> eig;
    for (const auto& c : kernel(*split - lambda * QMatrix::identity(k))) eig.push_back(lift(c));
    search(mats, largest_stable_in(mats, Subspace::span(f.ambient(), eig)), out);
  }
  if (fac.rest.degree() <= 0) return;
  if (fac.rest.degree() != 2) {
    out.unresolved.push_back("characteristic factor " + fac.rest.to_string() + " of degree " +
                             std::to_string(fac.rest.degree()));
    return;
  }
  // t^2 + b t + c with no rational root: eigenvalue (-b + sqrt(disc)) / 2 over Q(sqrt d).
  const Rational& b = fac.rest.coeff(1);
  const Rational& c0 = fac.rest.coeff(0);
  auto [d, s] = squarefree_part(b * b - 4 * c0);
  QuadNumber lambda(-b / 2, s / 2, d);
  Matrix<QuadNumber> mq(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mq(i, j) = QuadNumber((*split)(i, j)) - (i == j ? lambda : QuadNumber(0));
  auto ker = kernel(mq);
  if (ker.size() != 1) {
    out.unresolved.push_back("eigenspace of dimension " + std::to_string(ker.size()) + " for a root of " +
                             fac.rest.to_string());
    return;
  }
  std::vector<QuadNumber> v(idx(f.ambient()), QuadNumber(0));
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < f.ambient(); ++a) v[idx(a)] += ker[0][idx(i)] * QuadNumber(f.basis()[idx(i)][idx(a)]);
  for (const auto& m : mats) {
    Matrix<QuadNumber> mq2(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) mq2(i, j) = QuadNumber(m(i, j));
    if (!parallel(v, mq2.apply(v))) return;
  }
  out.quadratic_lines.push_back({v, d});
  std::vector<QuadNumber> conj;
  for (const auto& x : v) conj.emplace_back(x.a(), -x.b(), d);
  out.quadratic_lines.push_back({conj, d});
}

// Polynomials in s = x, t = y represented as Terms.
using Poly2 = Terms;

Poly2 lin_var(Axis a) { return Terms::variable(a); }

/// Coefficients of f as a polynomial in t (y), each a polynomial in s (x).
std::vector<Poly2> coeffs_in_t(const Poly2& f) {
  std::vector<Poly2> c;
  for (const auto& [m, v] : f.map()) {
    auto e = static_cast<std::size_t>(m.exps[1]);
    if (c.size() <= e) c.resize(e + 1);
    ExpMonomial rest = m;
    rest.exps[1] = 0;
    c[e].add_term(rest, v);
  }
  return c;
}

Poly2 det_poly(const std::vector<std::vector<Poly2>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly2 total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly2>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly2> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly2 term = m[0][j] * det_poly(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Sylvester resultant in t.
Poly2 resultant_t(const Poly2& f, const Poly2& g) {
  auto a = coeffs_in_t(f);
  auto b = coeffs_in_t(g);
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Poly2>> s(size, std::vector<Poly2>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  return det_poly(s);
}

int t_degree(const Poly2& f) {
  int d = 0;
  for (const auto& kv : f.map()) d = std::max(d, kv.first.exps[1]);
  return d;
}

/// Empty-chart decision. Returns a description when the system has no zero in the chart.
std::optional<std::string> chart_empty(const std::vector<Poly2>& eqs, int vars) {
  std::vector<Poly2> nz;
  for (const auto& e : eqs)
    if (!e.is_zero()) nz.push_back(e);
  if (vars == 0) {
    if (nz.empty()) return std::nullopt;
    return std::string("a minor is a nonzero constant");
  }
  if (vars == 1) {
    UPoly g;
    for (const auto& e : nz) g = gcd(g, UPoly::from_terms(e, Axis::Y));
    if (nz.empty() || g.degree() > 0) return std::nullopt;
    return "gcd of " + std::to_string(nz.size()) + " minors in t is 1";
  }
  std::vector<Poly2> with_t;
  UPoly g;
  int count = 0;
  for (const auto& e : nz) {
    if (t_degree(e) == 0) {
      g = gcd(g, UPoly::from_terms(e, Axis::X));
      ++count;
    } else {
      with_t.push_back(e);
    }
  }
  for (std::size_t i = 0; i < with_t.size(); ++i)
    for (std::size_t j = i + 1; j < with_t.size(); ++j) {
      Poly2 r = resultant_t(with_t[i], with_t[j]);
      if (r.is_zero()) continue;
      g = gcd(g, UPoly::from_terms(r, Axis::X));
      ++count;
    }
  if (count == 0 || g.degree() != 0) return std::nullopt;
  return "gcd in s of " + std::to_string(count) + " eliminants is 1";
}

}  // namespace

std::optional<std::string> certify_no_common_line(const std::vector<QMatrix>& mats) {
  if (mats.empty()) return std::nullopt;
  const int n = mats[0].rows();
  if (n < 2 || n > 3) return std::nullopt;
  // Affine charts covering projective space: (1,s,t), (0,1,t), (0,0,1) and their planar analogues.
  struct Chart {
    std::string name;
    std::vector<Poly2> point;
    int vars;
  };
  std::vector<Chart> charts;
  const Poly2 one(Rational(1));
  const Poly2 zero;
  if (n == 3) {
    charts.push_back({"(1,s,t)", {one, lin_var(Axis::X), lin_var(Axis::Y)}, 2});
    charts.push_back({"(0,1,t)", {zero, one, lin_var(Axis::Y)}, 1});
    charts.push_back({"(0,0,1)", {zero, zero, one}, 0});
  } else {
    charts.push_back({"(1,t)", {one, lin_var(Axis::Y)}, 1});
    charts.push_back({"(0,1)", {zero, one}, 0});
  }
  std::ostringstream cert;
  for (const auto& [name, v, vars] : charts) {
    std::vector<Poly2> eqs;
    for (const auto& m : mats) {
      std::vector<Poly2> w(idx(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m(i, j) != 0) w[idx(i)] += v[idx(j)] * m(i, j);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) eqs.push_back(v[idx(a)] * w[idx(b)] - v[idx(b)] * w[idx(a)]);
    }
    auto verdict = chart_empty(eqs, vars);
    if (!verdict) return std::nullopt;
    cert << "chart " << name << ": " << *verdict << "; ";
  }
  std::string s = cert.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

LineReport invariant_lines(const std::vector<QMatrix>& mats) {
  LineReport out;
  if (mats.empty()) return out;
  out.n = mats[0].rows();
  search(mats, Subspace::full(out.n), out);
  if (!out.has_lines()) {
    if (auto cert = certify_no_common_line(mats)) {
      out.empty_certified = true;
      out.certificate = *cert;
    }
  }
  return out;
}

// ----------------------------------------------------------------- foliations

std::string to_string(FoliationCase c) {
  switch (c) {
    case FoliationCase::B: return "B";
    case FoliationCase::C1: return "C1";
    case FoliationCase::C2: return "C2";
    case FoliationCase::D: return "D";
  }
  return "?";
}

namespace {

/// Coordinates in g/g0 of the class whose evaluation is `tangent`.
RationalVector quotient_coords(const SpannedAlgebra& a, const IsotropyData& iso, const RationalVector& tangent) {
  QMatrix e(a.space_dim(), iso.rank);
  for (int j = 0; j < iso.rank; ++j) e.set_col(j, eval_field(a[iso.complement[idx(j)]], iso.base_point));
  auto c = solve(e, tangent);
  if (!c) throw Error("tangent vector is not in the image of evaluation");
  return *c;
}

}  // namespace

bool is_invariant_tangent(const IsotropyData& iso, const SpannedAlgebra& a, const RationalVector& tangent) {
  RationalVector c = quotient_coords(a, iso, tangent);
  for (const auto& m : iso.rep_matrices)
    if (!parallel(c, m.apply(c))) return false;
  return true;
}

FoliationReport classify_foliation(const SpannedAlgebra& a, const IsotropyData& iso, const RationalVector& tangent) {
  FoliationReport rep;
  AbstractLieAlgebra g(a);
  const int n = g.dim();
  rep.line = quotient_coords(a, iso, tangent);
  RationalVector y(idx(n), Rational(0));
  for (int j = 0; j < iso.rank; ++j) y[idx(iso.complement[idx(j)])] = rep.line[idx(j)];
  Subspace p = iso.isotropy + Subspace::span(n, {y});
  rep.ideal = largest_ideal_in(g, p);
  rep.quotient_dim = n - rep.ideal.dim();
  rep.quotient_sub_dim = p.dim() - rep.ideal.dim();

  std::ostringstream why;
  why << "ideal of dimension " << rep.ideal.dim();
  if (rep.ideal.is_zero()) {
    rep.tag = FoliationCase::B;
    return rep;
  }
  rep.ideal_abelian = is_abelian(g, rep.ideal);
  AbstractLieAlgebra ia = g.restrict_to(rep.ideal);
  rep.ideal_killing_rank = rank(killing_matrix(ia));

  bool c1 = rep.ideal_abelian;
  bool c2 = false;
  bool d = rep.ideal.dim() == 3 && rep.ideal_killing_rank == 3;
  if (!c1) {
    const int m = ia.dim();
    Subspace da = bracket_space(ia, Subspace::full(m), Subspace::full(m));
    if (da.dim() == m - 1 && is_abelian(ia, da)) {
      // a = [a,a] + <h>; ad(h) restricted to [a,a] must be a nonzero scalar.
      int h = -1;
      for (int i = 0; i < m && h < 0; ++i)
        if (!da.contains(ia.unit(i))) h = i;
      std::optional<Rational> scalar;
      bool ok = true;
      for (const auto& u : da.basis()) {
        RationalVector img = ia.bracket(ia.unit(h), u);
        // img must equal c * u for one common c
        Rational c;
        bool found = false;
        for (int k = 0; k < m; ++k)
          if (u[idx(k)] != 0) {
            c = img[idx(k)] / u[idx(k)];
            found = true;
            break;
          }
        if (!found) ok = false;
        for (int k = 0; k < m && ok; ++k)
          if (img[idx(k)] != c * u[idx(k)]) ok = false;
        if (!ok) break;
        if (scalar && *scalar != c) ok = false;
        scalar = c;
      }
      if (ok && scalar && *scalar != 0) {
        c2 = true;
        rep.scaling_eigenvalue = scalar;
      }
    }
  }
  int count = static_cast<int>(c1) + static_cast<int>(c2) + static_cast<int>(d);
  if (count != 1) {
    why << ", abelian=" << rep.ideal_abelian << ", killing rank " << rep.ideal_killing_rank
        << ", derived dims of the ideal " ;
    for (int x : derived_series(ia).dims()) why << x << ' ';
    throw UnrecognizedIdealShape("largest ideal in the preimage of W has no recognized shape: " + why.str());
  }
  rep.tag = c1 ? FoliationCase::C1 : (c2 ? FoliationCase::C2 : FoliationCase::D);
  return rep;
}

}  // namespace lievf

#include "lievf/algstruct.hpp"

#include <sstream>

namespace lievf {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

/// Reduces v modulo an RREF row set; the result vanishes at every pivot column.
RationalVector reduce_mod(RationalVector v, const std::vector<RationalVector>& rows, const std::vector<int>& pivots) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational c = v[idx(pivots[r])];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (rows[r][j] != 0) v[j] -= c * rows[r][j];
  }
  return v;
}

bool all_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

// ------------------------------------------------------------------- Subspace

Subspace Subspace::full(int n) {
  Subspace s(n);
  for (int i = 0; i < n; ++i) {
    RationalVector e(idx(n), Rational(0));
    e[idx(i)] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  QMatrix m = QMatrix::from_rows(vectors, ambient);
  Rref<Rational> e = rref(std::move(m));
  for (int i = 0; i < e.rank(); ++i) s.rows_.push_back(e.reduced.row(i));
  s.pivots_ = e.pivots;
  return s;
}

bool Subspace::contains(const RationalVector& v) const { return all_zero(reduce_mod(v, rows_, pivots_)); }

bool Subspace::contains(const Subspace& s) const {
  for (const auto& r : s.rows_)
    if (!contains(r)) return false;
  return true;
}

std::optional<RationalVector> Subspace::coordinates(const RationalVector& v) const {
  if (!contains(v)) return std::nullopt;
  RationalVector c(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[idx(pivots_[r])];
  return c;
}

std::vector<RationalVector> Subspace::annihilator() const {
  if (rows_.empty()) return Subspace::full(ambient_).basis();
  return kernel(QMatrix::from_rows(rows_, ambient_));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  std::vector<RationalVector> all = a.rows_;
  all.insert(all.end(), b.rows_.begin(), b.rows_.end());
  return Subspace::span(a.ambient_, all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Vectors of a killed by every functional vanishing on b.
  auto ann = b.annihilator();
  if (ann.empty() || a.is_zero()) return a;
  QMatrix m(static_cast<int>(ann.size()), a.dim());
  for (std::size_t f = 0; f < ann.size(); ++f)
    for (int i = 0; i < a.dim(); ++i) {
      Rational s = 0;
      for (int k = 0; k < a.ambient(); ++k) s += ann[f][idx(k)] * a.basis()[idx(i)][idx(k)];
      m(static_cast<int>(f), i) = s;
    }
  std::vector<RationalVector> out;
  for (const auto& t : kernel(m)) {
    RationalVector v(idx(a.ambient()), Rational(0));
    for (int i = 0; i < a.dim(); ++i)
      for (int k = 0; k < a.ambient(); ++k) v[idx(k)] += t[idx(i)] * a.basis()[idx(i)][idx(k)];
    out.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), out);
}

// ---------------------------------------------------------- AbstractLieAlgebra

RationalVector AbstractLieAlgebra::unit(int i) const {
  RationalVector e(idx(dim_), Rational(0));
  e[idx(i)] = 1;
  return e;
}

RationalVector AbstractLieAlgebra::bracket(const RationalVector& u, const RationalVector& v) const {
  RationalVector r(idx(dim_), Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (u[idx(i)] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[idx(j)] == 0 || i == j) continue;
      Rational uv = u[idx(i)] * v[idx(j)];
      const auto& cij = c_[idx(i)][idx(j)];
      for (int k = 0; k < dim_; ++k)
        if (cij[idx(k)] != 0) r[idx(k)] += uv * cij[idx(k)];
    }
  }
  return r;
}

QMatrix AbstractLieAlgebra::ad(const RationalVector& u) const {
  QMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) m.set_col(j, bracket(u, unit(j)));
  return m;
}

QMatrix AbstractLieAlgebra::ad_basis(int i) const {
  QMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
  return m;
}

std::optional<std::string> AbstractLieAlgebra::check_identities() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) {
          std::ostringstream os;
          os << "antisymmetry fails at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k)
        for (int m = 0; m < dim_; ++m) {
          Rational s = 0;
          for (int l = 0; l < dim_; ++l)
            s += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) + c(k, i, l) * c(l, j, m);
          if (s != 0) {
            std::ostringstream os;
            os << "Jacobi fails for basis triple (" << i << "," << j << "," << k << ") in component " << m;
            return os.str();
          }
        }
  return std::nullopt;
}

AbstractLieAlgebra AbstractLieAlgebra::restrict_to(const Subspace& s) const {
  const int n = s.dim();
  StructureConstants c(idx(n), std::vector<RationalVector>(idx(n), RationalVector(idx(n), Rational(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto coords = s.coordinates(bracket(s.basis()[idx(i)], s.basis()[idx(j)]));
      if (!coords) throw Error("subspace is not a subalgebra");
      c[idx(i)][idx(j)] = std::move(*coords);
    }
  return AbstractLieAlgebra(n, std::move(c));
}

// ------------------------------------------------------------------ structure

Subspace bracket_space(const AbstractLieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<RationalVector> out;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      auto w = g.bracket(u, v);
      if (!all_zero(w)) out.push_back(std::move(w));
    }
  return Subspace::span(g.dim(), out);
}

bool is_subalgebra(const AbstractLieAlgebra& g, const Subspace& s) { return s.contains(bracket_space(g, s, s)); }

bool is_ideal(const AbstractLieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_space(g, Subspace::full(g.dim()), s));
}

bool is_abelian(const AbstractLieAlgebra& g, const Subspace& s) { return bracket_space(g, s, s).is_zero(); }

std::vector<int> SubspaceChain::dims() const {
  std::vector<int> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

SubspaceChain derived_series(const AbstractLieAlgebra& g) {
  SubspaceChain s;
  s.terms.push_back(Subspace::full(g.dim()));
  while (true) {
    Subspace next = bracket_space(g, s.terms.back(), s.terms.back());
    if (next.dim() == s.terms.back().dim()) break;
    s.terms.push_back(std::move(next));
    if (s.terms.back().is_zero()) break;
  }
  return s;
}

SubspaceChain lower_central_series(const AbstractLieAlgebra& g) {
  SubspaceChain s;
  const Subspace whole = Subspace::full(g.dim());
  s.terms.push_back(whole);
  while (true) {
    Subspace next = bracket_space(g, whole, s.terms.back());
    if (next.dim() == s.terms.back().dim()) break;
    s.terms.push_back(std::move(next));
    if (s.terms.back().is_zero()) break;
  }
  return s;
}

bool is_solvable(const AbstractLieAlgebra& g) { return derived_series(g).reaches_zero(); }
bool is_nilpotent(const AbstractLieAlgebra& g) { return lower_central_series(g).reaches_zero(); }

Subspace center(const AbstractLieAlgebra& g) {
  const int n = g.dim();
  if (n == 0) return Subspace(0);
  // x in center iff ad(e_i) x = 0 for all i: stack the ad matrices.
  QMatrix m(n * n, n);
  for (int i = 0; i < n; ++i) {
    QMatrix a = g.ad_basis(i);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(i * n + r, c) = a(r, c);
  }
  return Subspace::span(n, kernel(m));
}

QMatrix killing_matrix(const AbstractLieAlgebra& g) {
  const int n = g.dim();
  std::vector<QMatrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  QMatrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational t = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t += ads[idx(i)](a, b) * ads[idx(j)](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

bool is_semisimple(const AbstractLieAlgebra& g) { return g.dim() > 0 && determinant(killing_matrix(g)) != 0; }

Subspace largest_ideal_in(const AbstractLieAlgebra& g, const Subspace& s) {
  Subspace a = s;
  while (!a.is_zero()) {
    // x = sum_i t_i a_i with ad(e_k) x in a for all k.
    const auto ann = a.annihilator();
    if (ann.empty()) return a;
    const int r = a.dim();
    std::vector<RationalVector> rows;
    for (int k = 0; k < g.dim(); ++k) {
      std::vector<RationalVector> images;
      for (const auto& u : a.basis()) images.push_back(g.bracket(g.unit(k), u));
      for (const auto& f : ann) {
        RationalVector row(idx(r), Rational(0));
        for (int i = 0; i < r; ++i)
          for (int c = 0; c < g.dim(); ++c) row[idx(i)] += f[idx(c)] * images[idx(i)][idx(c)];
        rows.push_back(std::move(row));
      }
    }
    std::vector<RationalVector> next;
    for (const auto& t : kernel(QMatrix::from_rows(rows, r))) {
      RationalVector v(idx(g.dim()), Rational(0));
      for (int i = 0; i < r; ++i)
        for (int c = 0; c < g.dim(); ++c) v[idx(c)] += t[idx(i)] * a.basis()[idx(i)][idx(c)];
      next.push_back(std::move(v));
    }
    Subspace b = Subspace::span(g.dim(), next);
    if (b.dim() == a.dim()) return a;
    a = std::move(b);
  }
  return a;
}

Subspace radical(const AbstractLieAlgebra& g) {
  const int n = g.dim();
  if (n == 0) return Subspace(0);
  Subspace d = bracket_space(g, Subspace::full(n), Subspace::full(n));
  if (d.is_zero()) return Subspace::full(n);
  QMatrix k = killing_matrix(g);
  std::vector<RationalVector> rows;
  for (const auto& u : d.basis()) {
    RationalVector row(idx(n), Rational(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) row[idx(j)] += u[idx(i)] * k(i, j);
    rows.push_back(std::move(row));
  }
  return Subspace::span(n, kernel(QMatrix::from_rows(rows, n)));
}

AlgebraSignature signature(const AbstractLieAlgebra& g) {
  AlgebraSignature s;
  s.dim = g.dim();
  s.derived_dims = derived_series(g).dims();
  s.killing_rank = g.dim() ? rank(killing_matrix(g)) : 0;
  s.center_dim = center(g).dim();
  return s;
}

AbstractLieAlgebra quotient(const AbstractLieAlgebra& g, const Subspace& ideal) {
  const int n = g.dim();
  std::vector<bool> pivot(idx(n), false);
  for (int p : ideal.pivots()) pivot[idx(p)] = true;
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (!pivot[idx(i)]) keep.push_back(i);
  const int q = static_cast<int>(keep.size());
  StructureConstants c(idx(q), std::vector<RationalVector>(idx(q), RationalVector(idx(q), Rational(0))));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      RationalVector b = reduce_mod(g.bracket(g.unit(keep[idx(i)]), g.unit(keep[idx(j)])), ideal.basis(), ideal.pivots());
      for (int k = 0; k < q; ++k) c[idx(i)][idx(j)][idx(k)] = b[idx(keep[idx(k)])];
    }
  return AbstractLieAlgebra(q, std::move(c));
}

}  // namespace lievf

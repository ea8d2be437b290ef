#include "lievf/cohomology.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "lievf/dsl.hpp"
#include "lievf/geometry.hpp"

namespace lievf {

namespace {

using SparseVec = std::map<int, Rational>;

void add_to(SparseVec& a, const Rational& c, const SparseVec& b) {
  for (const auto& [k, v] : b) {
    auto [it, fresh] = a.try_emplace(k, c * v);
    if (!fresh) {
      it->second += c * v;
      if (it->second == 0) a.erase(it);
    }
  }
}

SparseRow to_row(const SparseVec& v) { return SparseRow(v.begin(), v.end()); }

SparseRow dense_to_row(const std::vector<Rational>& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r.emplace_back(static_cast<int>(i), v[i]);
  return r;
}

QMatrix inverse(const QMatrix& m) {
  const int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref<Rational> e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) throw Error("singular change of basis");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

long choose(long n, long k) { return (k < 0 || k > n) ? 0 : binomial(n, k).get_si(); }

/// Masks of n-subsets of {0..d-1}, in lexicographic order of the increasing tuples.
std::vector<unsigned> subsets(int d, int n) {
  std::vector<unsigned> out;
  std::vector<int> idx(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == n) {
      unsigned m = 0;
      for (int i : idx) m |= 1u << i;
      out.push_back(m);
      return;
    }
    for (int i = start; i < d; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<int> elements(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

/// Cochain index bookkeeping for one degree.
struct Degree {
  std::vector<unsigned> masks;
  std::vector<int> position;  // by mask
  std::vector<int> rel;       // full index -> relative index or -1
  int full = 0;
  int dim = 0;
};

Degree make_degree(int d, int d0, int dim_v, int dim_v0, int n) {
  Degree g;
  g.masks = subsets(d, n);
  g.position.assign(std::size_t{1} << d, -1);
  for (std::size_t i = 0; i < g.masks.size(); ++i) g.position[g.masks[i]] = static_cast<int>(i);
  const unsigned g0mask = (1u << d0) - 1;
  g.full = static_cast<int>(g.masks.size()) * dim_v;
  g.rel.assign(static_cast<std::size_t>(g.full), -1);
  for (std::size_t s = 0; s < g.masks.size(); ++s) {
    const bool inside = (g.masks[s] & ~g0mask) == 0;
    for (int t = 0; t < dim_v; ++t)
      if (!inside || t < dim_v0) g.rel[s * static_cast<std::size_t>(dim_v) + static_cast<std::size_t>(t)] = g.dim++;
  }
  return g;
}

/// Rows of d_n over relative columns, indexed by relative C^{n+1} rows. Sets `closed` false when
/// a non-relative row has a nonzero entry.
std::vector<SparseRow> differential(const PairOfAlgebras& pair, const PairModule& mod, const Degree& src,
                                    const Degree& dst, int n, bool& closed) {
  const int dv = mod.dim_v;
  const AbstractLieAlgebra& g = pair.algebra;
  std::vector<SparseRow> rows(static_cast<std::size_t>(dst.dim));
  for (std::size_t ti = 0; ti < dst.masks.size(); ++ti) {
    const std::vector<int> T = elements(dst.masks[ti]);
    std::vector<SparseVec> acc(static_cast<std::size_t>(dv));
    for (int i = 0; i <= n; ++i) {
      const int xi = T[static_cast<std::size_t>(i)];
      const unsigned smask = dst.masks[ti] & ~(1u << xi);
      const int s = src.position[smask];
      const Rational sign = (i % 2) ? -1 : 1;
      const QMatrix& rho = mod.action[static_cast<std::size_t>(xi)];
      for (int t = 0; t < dv; ++t) {
        const int col = src.rel[static_cast<std::size_t>(s * dv + t)];
        if (col < 0) continue;
        for (int u = 0; u < dv; ++u)
          if (rho(u, t) != 0) add_to(acc[static_cast<std::size_t>(u)], sign * rho(u, t), {{col, Rational(1)}});
      }
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int xi = T[static_cast<std::size_t>(i)], xj = T[static_cast<std::size_t>(j)];
        const unsigned rest = dst.masks[ti] & ~(1u << xi) & ~(1u << xj);
        const Rational sign = ((i + j) % 2) ? -1 : 1;
        for (int k = 0; k < g.dim(); ++k) {
          const Rational& c = g.c(xi, xj, k);
          if (c == 0 || (rest & (1u << k))) continue;
          const int below = std::popcount(rest & ((1u << k) - 1));
          const Rational sigma = (below % 2) ? -1 : 1;
          const int s = src.position[rest | (1u << k)];
          for (int u = 0; u < dv; ++u) {
            const int col = src.rel[static_cast<std::size_t>(s * dv + u)];
            if (col >= 0) add_to(acc[static_cast<std::size_t>(u)], sign * sigma * c, {{col, Rational(1)}});
          }
        }
      }
    for (int u = 0; u < dv; ++u) {
      const int row = dst.rel[ti * static_cast<std::size_t>(dv) + static_cast<std::size_t>(u)];
      if (row < 0) {
        if (!acc[static_cast<std::size_t>(u)].empty()) closed = false;
        continue;
      }
      rows[static_cast<std::size_t>(row)] = to_row(acc[static_cast<std::size_t>(u)]);
    }
  }
  return rows;
}

int sparse_rank(const std::vector<SparseRow>& rows, int cols) {
  SparseEchelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

bool composition_zero(const std::vector<SparseRow>& outer, const std::vector<SparseRow>& inner) {
  for (const auto& row : outer) {
    SparseRow acc;
    for (const auto& [k, v] : row) acc = sparse_axpy(acc, v, inner[static_cast<std::size_t>(k)]);
    if (!acc.empty()) return false;
  }
  return true;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace

// ------------------------------------------------------------------ pair and module

bool PairOfAlgebras::is_effective() const {
  std::vector<RationalVector> units;
  for (int a = 0; a < d0; ++a) units.push_back(algebra.unit(a));
  return largest_ideal_in(algebra, Subspace::span(dim(), units)).is_zero();
}

std::optional<std::string> PairModule::check(const PairOfAlgebras& pair) const {
  const auto& g = pair.algebra;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      QMatrix lhs(dim_v, dim_v);
      for (int k = 0; k < g.dim(); ++k)
        if (g.c(a, b, k) != 0) lhs = lhs + g.c(a, b, k) * action[static_cast<std::size_t>(k)];
      if (!(lhs == commutator(action[static_cast<std::size_t>(a)], action[static_cast<std::size_t>(b)])))
        return fmt::format("rho([e{}, e{}]) != [rho(e{}), rho(e{})]", a, b, a, b);
    }
  for (int a = 0; a < pair.d0; ++a)
    for (int u = dim_v0; u < dim_v; ++u)
      for (int t = 0; t < dim_v0; ++t)
        if (action[static_cast<std::size_t>(a)](u, t) != 0)
          return fmt::format("V0 is not stable under isotropy element {}", a);
  return std::nullopt;
}

int PairModule::largest_submodule_in_v0() const {
  std::vector<RationalVector> basis;
  for (int t = 0; t < dim_v0; ++t) {
    RationalVector v(static_cast<std::size_t>(dim_v), Rational(0));
    v[static_cast<std::size_t>(t)] = 1;
    basis.push_back(std::move(v));
  }
  while (!basis.empty()) {
    Subspace s = Subspace::span(dim_v, basis);
    auto ann = s.annihilator();
    if (ann.empty()) return static_cast<int>(basis.size());
    const int k = static_cast<int>(basis.size());
    QMatrix cond(static_cast<int>(ann.size() * action.size()), k);
    int row = 0;
    for (const auto& rho : action)
      for (const auto& f : ann) {
        for (int c = 0; c < k; ++c) {
          RationalVector img = rho.apply(basis[static_cast<std::size_t>(c)]);
          Rational dot = 0;
          for (int i = 0; i < dim_v; ++i) dot += f[static_cast<std::size_t>(i)] * img[static_cast<std::size_t>(i)];
          cond(row, c) = dot;
        }
        ++row;
      }
    auto ker = kernel(cond);
    if (static_cast<int>(ker.size()) == k) return k;
    std::vector<RationalVector> next;
    for (const auto& lam : ker) {
      RationalVector v(static_cast<std::size_t>(dim_v), Rational(0));
      for (int c = 0; c < k; ++c)
        for (int i = 0; i < dim_v; ++i)
          v[static_cast<std::size_t>(i)] += lam[static_cast<std::size_t>(c)] * basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return 0;
}

PairAndModule build_pair_module_from_bundle(const std::vector<LiftedOperator>& operators,
                                            const std::vector<CoeffFn>& functions, const Point& base_point) {
  std::vector<VectorField> fields;
  for (const auto& op : operators) fields.push_back(op.field);
  PairAndModule out;
  out.planar = lie_closure(fields);
  const int d = out.planar.dim();
  if (d != static_cast<int>(operators.size())) throw Error("operator fields are linearly dependent");
  IsotropyData iso = isotropy_at(out.planar, base_point);
  if (iso.rank != fields.front().dim()) throw Error("operator fields are not transitive at the base point");

  const int d0 = iso.isotropy.dim();
  QMatrix P(d, d);
  for (int a = 0; a < d0; ++a) P.set_col(a, iso.isotropy.basis()[static_cast<std::size_t>(a)]);
  for (std::size_t c = 0; c < iso.complement.size(); ++c) P(iso.complement[c], d0 + static_cast<int>(c)) = 1;
  const QMatrix Pinv = inverse(P);

  const AbstractLieAlgebra orig(out.planar);
  StructureConstants c(static_cast<std::size_t>(d),
                       std::vector<RationalVector>(static_cast<std::size_t>(d), RationalVector(static_cast<std::size_t>(d), Rational(0))));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Pinv.apply(orig.bracket(P.col(a), P.col(b)));
  out.pair.algebra = AbstractLieAlgebra(d, std::move(c));
  out.pair.d0 = d0;
  out.pair.basis = P;

  FunctionSpan span(functions);
  if (span.dim() != static_cast<int>(functions.size())) throw Error("module functions are linearly dependent");
  const int dv = span.dim();
  std::vector<QMatrix> raw;
  for (int k = 0; k < d; ++k) {
    QMatrix A(dv, dv);
    for (int t = 0; t < dv; ++t) {
      const CoeffFn& f = span.basis()[static_cast<std::size_t>(t)];
      CoeffFn img = op_apply(operators[static_cast<std::size_t>(k)], f);
      auto coords = span.coordinates(img);
      if (!coords)
        throw NotClosedUnderAction(k, f, img,
                                   "operator " + print(operators[static_cast<std::size_t>(k)]) + " maps " + print(f) +
                                       " to " + print(img) + ", outside the module");
      A.set_col(t, *coords);
    }
    raw.push_back(std::move(A));
  }

  QMatrix ev(1, dv);
  for (int t = 0; t < dv; ++t) ev(0, t) = span.basis()[static_cast<std::size_t>(t)].eval(base_point);
  auto v0 = kernel(ev);
  QMatrix Q(dv, dv);
  int col = 0;
  for (const auto& v : v0) Q.set_col(col++, v);
  for (int t = 0; t < dv && col < dv; ++t)
    if (ev(0, t) != 0) {
      Q(t, col++) = 1;
      break;
    }
  const QMatrix Qinv = inverse(Q);
  out.module.dim_v = dv;
  out.module.dim_v0 = static_cast<int>(v0.size());
  out.module.basis = Q;
  for (int a = 0; a < d; ++a) {
    QMatrix A(dv, dv);
    for (int i = 0; i < d; ++i)
      if (P(i, a) != 0) A = A + P(i, a) * raw[static_cast<std::size_t>(i)];
    out.module.action.push_back(Qinv * A * Q);
  }
  return out;
}

// ------------------------------------------------------------------ the complex

std::vector<int> RelativeComplex::cohomology() const {
  std::vector<int> h;
  for (int n = 0; n < 3; ++n)
    h.push_back(dims[static_cast<std::size_t>(n)] - ranks[static_cast<std::size_t>(n)] -
                (n > 0 ? ranks[static_cast<std::size_t>(n - 1)] : 0));
  return h;
}

int cochain2_index(int d, int dim_v, int i, int j, int t) {
  // Pairs (i, j) in lexicographic order: the pairs before row i number i*d - i(i+1)/2.
  const int pair = i * d - i * (i + 1) / 2 + (j - i - 1);
  return pair * dim_v + t;
}

RelativeComplex relative_complex(const PairOfAlgebras& pair, const PairModule& mod) {
  RelativeComplex rc;
  rc.d = pair.dim();
  rc.d0 = pair.d0;
  rc.dim_v = mod.dim_v;
  rc.dim_v0 = mod.dim_v0;
  std::vector<Degree> deg;
  for (int n = 0; n <= 3; ++n) {
    deg.push_back(make_degree(rc.d, rc.d0, rc.dim_v, rc.dim_v0, n));
    rc.dims.push_back(deg.back().dim);
  }
  std::vector<std::vector<SparseRow>> dn;
  for (int n = 0; n < 3; ++n) {
    bool closed = true;
    dn.push_back(differential(pair, mod, deg[static_cast<std::size_t>(n)], deg[static_cast<std::size_t>(n + 1)], n, closed));
    rc.subcomplex = rc.subcomplex && closed;
    rc.ranks.push_back(sparse_rank(dn.back(), deg[static_cast<std::size_t>(n)].dim));
  }
  rc.dd_zero = composition_zero(dn[1], dn[0]) && composition_zero(dn[2], dn[1]);

  SparseEchelon cocycles(rc.dims[2]);
  for (const auto& r : dn[2]) cocycles.insert(r);
  std::vector<SparseVec> image_cols(static_cast<std::size_t>(rc.dims[1]));
  for (std::size_t r = 0; r < dn[1].size(); ++r)
    for (const auto& [c, v] : dn[1][r]) image_cols[static_cast<std::size_t>(c)].emplace(static_cast<int>(r), v);
  SparseEchelon span(rc.dims[2]);
  for (const auto& col : image_cols) span.insert(to_row(col));
  std::vector<int> rel_to_full(static_cast<std::size_t>(rc.dims[2]));
  for (std::size_t f = 0; f < deg[2].rel.size(); ++f)
    if (deg[2].rel[f] >= 0) rel_to_full[static_cast<std::size_t>(deg[2].rel[f])] = static_cast<int>(f);
  for (const auto& z : cocycles.kernel()) {
    if (!span.insert(dense_to_row(z))) continue;
    std::vector<Rational> full(static_cast<std::size_t>(deg[2].full), Rational(0));
    for (std::size_t i = 0; i < z.size(); ++i) full[static_cast<std::size_t>(rel_to_full[i])] = z[i];
    rc.h2_representatives.push_back(std::move(full));
  }
  return rc;
}

std::vector<int> cohomology_dims(const PairOfAlgebras& pair, const PairModule& module) {
  return relative_complex(pair, module).cohomology();
}

int h1_quotient_shortcut(const PairOfAlgebras& pair, const PairModule& module) {
  if (!is_semisimple(pair.algebra)) throw NotSemisimple("the Killing form of g is degenerate");
  const int d0 = pair.d0;
  StructureConstants c(static_cast<std::size_t>(d0),
                       std::vector<RationalVector>(static_cast<std::size_t>(d0), RationalVector(static_cast<std::size_t>(d0), Rational(0))));
  for (int a = 0; a < d0; ++a)
    for (int b = 0; b < d0; ++b)
      for (int k = 0; k < pair.dim(); ++k) {
        const Rational& v = pair.algebra.c(a, b, k);
        if (v == 0) continue;
        if (k >= d0) throw Error("g0 is not a subalgebra");
        c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = v;
      }
  PairOfAlgebras sub{AbstractLieAlgebra(d0, std::move(c)), 0, QMatrix::identity(d0)};
  const int q = module.dim_v - module.dim_v0;
  PairModule quot;
  quot.dim_v = q;
  quot.dim_v0 = q;  // with g0 = 0 the relative complex is the ordinary one
  quot.basis = QMatrix::identity(q);
  for (int a = 0; a < d0; ++a) {
    QMatrix m(q, q);
    for (int u = 0; u < q; ++u)
      for (int t = 0; t < q; ++t) m(u, t) = module.action[static_cast<std::size_t>(a)](module.dim_v0 + u, module.dim_v0 + t);
    quot.action.push_back(std::move(m));
  }
  return relative_complex(sub, quot).cohomology()[1];
}

bool exactness_dim_check(const PairOfAlgebras& pair, const PairModule& module) {
  const RelativeComplex rc = relative_complex(pair, module);
  for (int n = 0; n <= 3; ++n) {
    const long full = choose(rc.d, n) * rc.dim_v;
    const long quotient = choose(rc.d0, n) * (rc.dim_v - rc.dim_v0);
    if (full != rc.dims[static_cast<std::size_t>(n)] + quotient) return false;
  }
  return true;
}

// ------------------------------------------------------------------ extensions

namespace {

/// Structure constants of g ⊕ V in the order (g basis, V basis).
StructureConstants extension_constants(const PairOfAlgebras& pair, const PairModule& mod,
                                       const std::vector<Rational>& cocycle) {
  const int d = pair.dim(), dv = mod.dim_v, D = d + dv;
  const auto zero = RationalVector(static_cast<std::size_t>(D), Rational(0));
  StructureConstants c(static_cast<std::size_t>(D), std::vector<RationalVector>(static_cast<std::size_t>(D), zero));
  auto at = [&](int i, int j) -> RationalVector& { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) at(a, b)[static_cast<std::size_t>(k)] = pair.algebra.c(a, b, k);
      if (a == b) continue;
      const int lo = std::min(a, b), hi = std::max(a, b);
      const Rational sign = a < b ? 1 : -1;
      for (int t = 0; t < dv; ++t)
        at(a, b)[static_cast<std::size_t>(d + t)] = sign * cocycle[static_cast<std::size_t>(cochain2_index(d, dv, lo, hi, t))];
    }
  for (int a = 0; a < d; ++a)
    for (int t = 0; t < dv; ++t)
      for (int u = 0; u < dv; ++u) {
        const Rational& v = mod.action[static_cast<std::size_t>(a)](u, t);
        at(a, d + t)[static_cast<std::size_t>(d + u)] = v;
        at(d + t, a)[static_cast<std::size_t>(d + u)] = -v;
      }
  return c;
}

}  // namespace

PairOfAlgebras build_extension(const PairOfAlgebras& pair, const PairModule& mod, const std::vector<Rational>& cocycle) {
  const int d = pair.dim(), dv = mod.dim_v, D = d + dv;
  const AbstractLieAlgebra natural(D, extension_constants(pair, mod, cocycle));
  for (int i = 0; i < D; ++i)
    for (int j = i + 1; j < D; ++j)
      for (int k = j + 1; k < D; ++k) {
        auto e = [&](int a) { return natural.unit(a); };
        RationalVector s = natural.bracket(natural.bracket(e(i), e(j)), e(k));
        RationalVector t = natural.bracket(natural.bracket(e(j), e(k)), e(i));
        RationalVector u = natural.bracket(natural.bracket(e(k), e(i)), e(j));
        for (int l = 0; l < D; ++l)
          if (s[static_cast<std::size_t>(l)] + t[static_cast<std::size_t>(l)] + u[static_cast<std::size_t>(l)] != 0)
            throw NotACocycle(i, j, k, fmt::format("Jacobi identity fails on the extension at ({}, {}, {})", i, j, k));
      }
  std::vector<int> order;
  for (int a = 0; a < pair.d0; ++a) order.push_back(a);
  for (int t = 0; t < mod.dim_v0; ++t) order.push_back(d + t);
  for (int a = pair.d0; a < d; ++a) order.push_back(a);
  for (int t = mod.dim_v0; t < dv; ++t) order.push_back(d + t);
  std::vector<int> where(static_cast<std::size_t>(D));
  for (int i = 0; i < D; ++i) where[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  const auto zero = RationalVector(static_cast<std::size_t>(D), Rational(0));
  StructureConstants c(static_cast<std::size_t>(D), std::vector<RationalVector>(static_cast<std::size_t>(D), zero));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      for (int k = 0; k < D; ++k)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(where[static_cast<std::size_t>(k)])] =
            natural.c(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)], k);
  PairOfAlgebras out;
  out.algebra = AbstractLieAlgebra(D, std::move(c));
  out.d0 = pair.d0 + mod.dim_v0;
  out.basis = QMatrix(D, D);
  for (int i = 0; i < D; ++i) out.basis(order[static_cast<std::size_t>(i)], i) = 1;
  return out;
}

ExtensionMatch match_extension(const PairOfAlgebras& pair, const PairModule& mod, const std::vector<Rational>& cocycle,
                               const SpannedAlgebra& real, const Point& base_point) {
  ExtensionMatch out;
  const int d = pair.dim(), dv = mod.dim_v, D = d + dv;
  if (real.dim() != D || !real.has_structure()) {
    out.detail = fmt::format("realization has dimension {}, expected {}", real.dim(), D);
    return out;
  }
  const AbstractLieAlgebra R(real);
  for (int s = d; s < D; ++s)
    for (int s2 = d; s2 < D; ++s2)
      for (int l = 0; l < D; ++l)
        if (R.c(s, s2, l) != 0) {
          out.detail = "module generators of the realization do not commute";
          return out;
        }
  const AbstractLieAlgebra ext(D, extension_constants(pair, mod, cocycle));

  // Affine forms over the unknowns phi (d x dv) then C (dv x dv); index N holds the constant.
  const int N = d * dv + dv * dv;
  using Affine = std::vector<Rational>;
  using AffVec = std::vector<Affine>;
  const Affine zero_aff(static_cast<std::size_t>(N + 1), Rational(0));
  std::vector<AffVec> T(static_cast<std::size_t>(D), AffVec(static_cast<std::size_t>(D), zero_aff));
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < d; ++i) T[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)][static_cast<std::size_t>(N)] = pair.basis(i, a);
    for (int s = 0; s < dv; ++s) T[static_cast<std::size_t>(a)][static_cast<std::size_t>(d + s)][static_cast<std::size_t>(a * dv + s)] = 1;
  }
  for (int t = 0; t < dv; ++t)
    for (int s = 0; s < dv; ++s)
      T[static_cast<std::size_t>(d + t)][static_cast<std::size_t>(d + s)][static_cast<std::size_t>(d * dv + t * dv + s)] = 1;

  auto mul = [&](const Affine& x, const Affine& y) {
    Affine r = zero_aff;
    const Rational& x0 = x[static_cast<std::size_t>(N)];
    const Rational& y0 = y[static_cast<std::size_t>(N)];
    for (int u = 0; u < N; ++u) r[static_cast<std::size_t>(u)] = x0 * y[static_cast<std::size_t>(u)] + y0 * x[static_cast<std::size_t>(u)];
    r[static_cast<std::size_t>(N)] = x0 * y0;
    return r;
  };
  std::vector<std::vector<Rational>> rows;
  for (int X = 0; X < D; ++X)
    for (int Y = X + 1; Y < D; ++Y) {
      AffVec diff(static_cast<std::size_t>(D), zero_aff);
      for (int l = 0; l < D; ++l) {
        const Rational& c = ext.c(X, Y, l);
        if (c == 0) continue;
        for (int k = 0; k < D; ++k)
          for (int u = 0; u <= N; ++u)
            diff[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)] += c * T[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
      }
      for (int k = 0; k < D; ++k)
        for (int k2 = 0; k2 < D; ++k2) {
          Affine prod = mul(T[static_cast<std::size_t>(X)][static_cast<std::size_t>(k)], T[static_cast<std::size_t>(Y)][static_cast<std::size_t>(k2)]);
          for (int l = 0; l < D; ++l) {
            const Rational& s = R.c(k, k2, l);
            if (s == 0) continue;
            for (int u = 0; u <= N; ++u) diff[static_cast<std::size_t>(l)][static_cast<std::size_t>(u)] -= s * prod[static_cast<std::size_t>(u)];
          }
        }
      for (auto& r : diff) rows.push_back(std::move(r));
    }
  std::vector<std::vector<Rational>> evals;
  for (int k = 0; k < D; ++k) evals.push_back(eval_field(real[k], base_point));
  std::vector<int> sub;
  for (int a = 0; a < pair.d0; ++a) sub.push_back(a);
  for (int t = 0; t < mod.dim_v0; ++t) sub.push_back(d + t);
  for (int X : sub)
    for (int comp = 0; comp < real.space_dim(); ++comp) {
      Affine r = zero_aff;
      for (int k = 0; k < D; ++k)
        for (int u = 0; u <= N; ++u)
          r[static_cast<std::size_t>(u)] += evals[static_cast<std::size_t>(k)][static_cast<std::size_t>(comp)] * T[static_cast<std::size_t>(X)][static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
      rows.push_back(std::move(r));
    }

  QMatrix M(static_cast<int>(rows.size()), N);
  std::vector<Rational> b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int u = 0; u < N; ++u) M(static_cast<int>(i), u) = rows[i][static_cast<std::size_t>(u)];
    b[i] = -rows[i][static_cast<std::size_t>(N)];
  }
  auto sol = solve(M, b);
  if (!sol) {
    out.detail = "no bracket-preserving map sends g0 + V0 into the isotropy";
    return out;
  }
  auto cmat = [&](const std::vector<Rational>& x) {
    QMatrix c(dv, dv);
    for (int t = 0; t < dv; ++t)
      for (int s = 0; s < dv; ++s) c(t, s) = x[static_cast<std::size_t>(d * dv + t * dv + s)];
    return c;
  };
  std::vector<std::vector<Rational>> candidates{*sol};
  for (const auto& k : kernel(M)) {
    auto x = *sol;
    for (int u = 0; u < N; ++u) x[static_cast<std::size_t>(u)] += k[static_cast<std::size_t>(u)];
    candidates.push_back(std::move(x));
  }
  for (const auto& x : candidates) {
    if (determinant(cmat(x)) == 0) continue;
    QMatrix Tm(D, D);
    for (int X = 0; X < D; ++X)
      for (int k = 0; k < D; ++k) {
        const Affine& f = T[static_cast<std::size_t>(X)][static_cast<std::size_t>(k)];
        Rational v = f[static_cast<std::size_t>(N)];
        for (int u = 0; u < N; ++u) v += f[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)];
        Tm(k, X) = v;
      }
    for (int X = 0; X < D; ++X)
      for (int Y = 0; Y < D; ++Y)
        if (Tm.apply(ext.bracket(ext.unit(X), ext.unit(Y))) != R.bracket(Tm.col(X), Tm.col(Y))) {
          out.detail = fmt::format("solved map fails to preserve [e{}, e{}]", X, Y);
          return out;
        }
    out.found = true;
    out.c = cmat(x);
    out.phi.assign(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(dv)));
    std::string phis;
    for (int a = 0; a < d; ++a)
      for (int s = 0; s < dv; ++s) {
        out.phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] = x[static_cast<std::size_t>(a * dv + s)];
        phis += (phis.empty() ? "" : ", ") + to_string(x[static_cast<std::size_t>(a * dv + s)]);
      }
    out.detail = "phi = (" + phis + "), C = " + to_string(out.c);
    return out;
  }
  out.detail = "every bracket-preserving map is singular on the module";
  return out;
}

// ------------------------------------------------------------------ invariant-cocycle solver

namespace {

struct SparseAlgebra {
  int dim = 0;
  std::vector<std::vector<SparseVec>> c;
  std::vector<int> v;  // indices of v_0..v_n
  std::vector<int> w;  // indices of w_{p,k}
  std::vector<std::pair<int, int>> pairs;
  std::vector<Rational> a;  // a^{ij}_k, pair-major

  SparseVec basis_bracket(int x, int y) const {
    SparseVec r = c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    const int K = static_cast<int>(w.size());
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const int vi = v[static_cast<std::size_t>(pairs[pi].first)], vj = v[static_cast<std::size_t>(pairs[pi].second)];
      Rational sign = 0;
      if (x == vi && y == vj) sign = 1;
      if (x == vj && y == vi) sign = -1;
      if (sign == 0) continue;
      for (int k = 0; k < K; ++k) {
        const Rational& coef = a[pi * static_cast<std::size_t>(K) + static_cast<std::size_t>(k)];
        if (coef != 0) add_to(r, sign * coef, {{w[static_cast<std::size_t>(k)], Rational(1)}});
      }
    }
    return r;
  }
  SparseVec bracket(const SparseVec& u, int y) const {
    SparseVec r;
    for (const auto& [i, ui] : u) add_to(r, ui, basis_bracket(i, y));
    return r;
  }
  SparseVec jacobiator(int x, int y, int z) const {
    SparseVec r = bracket(basis_bracket(x, y), z);
    add_to(r, 1, bracket(basis_bracket(y, z), x));
    add_to(r, 1, bracket(basis_bracket(z, x), y));
    return r;
  }
};

}  // namespace

Case13Solution case13_cocycle_space(int n, int p, int m) {
  if (n < 1 || p < 1 || m < 0 || n * p > m) throw BadParams("solver needs n >= 1, p >= 1, n p <= m");
  Case13Solution out;
  out.n = n;
  out.p = p;
  out.m = m;
  std::vector<VectorField> gens{parse_field("p", 3), parse_field(fmt::format("2*x*p + {}*y*q + {}*z*r", n, m), 3),
                                parse_field(fmt::format("x^2*p + {}*x*y*q + {}*x*z*r", n, m), 3)};
  SparseAlgebra A;
  Rational fact = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= i;
    A.v.push_back(static_cast<int>(gens.size()));
    gens.push_back(parse_field(fmt::format("(1/{})*x^{}*q", to_string(fact), i), 3));
  }
  for (int q = 0; q <= p; ++q) {
    Rational f = 1;
    for (int k = 0; k <= m - n * q; ++k) {
      if (k > 0) f *= k;
      if (q == p) A.w.push_back(static_cast<int>(gens.size()));
      gens.push_back(parse_field(fmt::format("(1/{})*x^{}*y^{}*r", to_string(f), k, q), 3));
    }
  }
  const SpannedAlgebra natural = lie_closure(gens);
  A.dim = natural.dim();
  A.c.assign(static_cast<std::size_t>(A.dim), std::vector<SparseVec>(static_cast<std::size_t>(A.dim)));
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      const auto& col = natural.structure()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k < A.dim; ++k)
        if (col[static_cast<std::size_t>(k)] != 0) A.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace(k, col[static_cast<std::size_t>(k)]);
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) A.pairs.emplace_back(i, j);
  const int K = static_cast<int>(A.w.size());
  const int unknowns = static_cast<int>(A.pairs.size()) * K;

  // The Jacobi system is linear in a: no Jacobiator uses two modified brackets.
  std::map<std::pair<int, int>, SparseRow> rows;
  std::vector<std::array<int, 3>> triples;
  for (std::size_t pi = 0; pi < A.pairs.size(); ++pi)
    for (int x = 0; x < A.dim; ++x)
      triples.push_back({x, A.v[static_cast<std::size_t>(A.pairs[pi].first)], A.v[static_cast<std::size_t>(A.pairs[pi].second)]});
  for (int t = 0; t < unknowns; ++t) {
    A.a.assign(static_cast<std::size_t>(unknowns), Rational(0));
    A.a[static_cast<std::size_t>(t)] = 1;
    for (std::size_t ti = 0; ti < triples.size(); ++ti)
      for (const auto& [comp, val] : A.jacobiator(triples[ti][0], triples[ti][1], triples[ti][2]))
        rows[{static_cast<int>(ti), comp}].emplace_back(t, val);
  }
  SparseEchelon sys(unknowns);
  for (auto& [key, row] : rows) sys.insert(row);
  const auto ker = sys.kernel();
  out.dimension = static_cast<int>(ker.size());
  if (out.dimension != 1) return out;

  auto normalized = [](std::vector<Rational> v) {
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it != v.end()) {
      const Rational lead = *it;
      for (auto& x : v) x /= lead;
    }
    return v;
  };
  out.cocycle = normalized(ker.front());
  A.a = out.cocycle;
  bool ok = true;
  for (int i = 0; i < A.dim && ok; ++i)
    for (int j = i + 1; j < A.dim && ok; ++j)
      for (int k = j + 1; k < A.dim && ok; ++k) ok = A.jacobiator(i, j, k).empty();
  out.jacobi_ok = ok;

  std::vector<Rational> closed(static_cast<std::size_t>(unknowns), Rational(0));
  bool representable = true;
  for (std::size_t pi = 0; pi < A.pairs.size(); ++pi) {
    const auto [i, j] = A.pairs[pi];
    const int k = i + j - 1;
    if (k >= K) {
      representable = false;
      continue;
    }
    closed[pi * static_cast<std::size_t>(K) + static_cast<std::size_t>(k)] = Rational(binomial(k, i) - binomial(k, j));
  }
  out.closed_form_ok = representable && normalized(closed) == out.cocycle;
  return out;
}

// ------------------------------------------------------------------ cases

namespace {

LiftedOperator op(const std::string& text) { return parse_operator(text, 2); }

std::string Q(const Rational& r) { return "(" + to_string(r) + ")"; }

CoeffFn monomial(int a, int b) {
  ExpMonomial e;
  e.exps = {a, b, 0};
  return CoeffFn(Terms::monomial(e));
}

long nat(const Params& p, const std::string& name, long min = 0) {
  long v = p.integer(name);
  if (v < min) throw BadParams(fmt::format("parameter {} must be >= {}, got {}", name, min, v));
  return v;
}

void need_ms(const Params& p) {
  if (p.ms.empty()) throw BadParams("missing list parameter ms");
}

std::vector<std::vector<int>> subsets_of(std::vector<int> values, std::size_t max_size) {
  std::vector<std::vector<int>> out;
  const unsigned n = static_cast<unsigned>(values.size());
  for (std::size_t size = 1; size <= max_size; ++size)
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      std::vector<int> s;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(values[i]);
      out.push_back(s);
    }
  return out;
}

Params with_ms(Params p, std::vector<int> ms) {
  p.ms = std::move(ms);
  return p;
}

Params num(std::initializer_list<std::pair<const char*, Rational>> kv) {
  Params p;
  for (const auto& [k, v] : kv) p.num[k] = v;
  return p;
}

std::vector<LiftedOperator> sl2_lines(const std::string& iso) {
  return {op("p"), op("2*x*p - q"), op(iso)};
}

std::vector<CohomologyCase> make_cases() {
  std::vector<CohomologyCase> cs;

  cs.push_back({"case6", "ms", true, need_ms,
                [](const Params&) { return sl2_lines("x^2*p - x*q"); },
                [](const Params& P) { return family_sum(FamilyKind::Vm, P); },
                [](const Params&) { return Expectation{true, 1}; },
                [] {
                  std::vector<Params> g;
                  for (auto& s : subsets_of({0, 1, 2, 3}, 3)) g.push_back(with_ms(Params{}, s));
                  return g;
                }});

  cs.push_back({"case7", "n, ms", true,
                [](const Params& P) {
                  nat(P, "n");
                  need_ms(P);
                },
                [](const Params& P) {
                  const long n = nat(P, "n");
                  return std::vector<LiftedOperator>{op("p"), op(fmt::format("x*p - y*q - {}", Q(make_rational(n, 2)))),
                                                     op(fmt::format("-x^2*p + (1 + 2*x*y)*q + {}*x", n))};
                },
                [](const Params& P) { return family_sum(FamilyKind::Vnm, P); },
                [](const Params& P) { return Expectation{true, P.integer("n") == 0 ? 1 : 0}; },
                [] {
                  std::vector<Params> g;
                  for (int n = 0; n <= 3; ++n)
                    for (auto& s : subsets_of({0, 1, 2}, 2)) g.push_back(with_ms(num({{"n", n}}), s));
                  return g;
                }});

  cs.push_back({"case8", "alpha, beta", true,
                [](const Params& P) {
                  nat(P, "alpha");
                  nat(P, "beta");
                },
                [](const Params& P) {
                  const long a = nat(P, "alpha"), b = nat(P, "beta");
                  return std::vector<LiftedOperator>{op("p"), op(fmt::format("2*x*p - {}", a)), op(fmt::format("x^2*p - {}*x", a)),
                                                     op("q"), op(fmt::format("2*y*q - {}", b)), op(fmt::format("y^2*q - {}*y", b))};
                },
                [](const Params& P) {
                  std::vector<CoeffFn> f;
                  for (long j = 0; j <= nat(P, "beta"); ++j)
                    for (long i = 0; i <= nat(P, "alpha"); ++i) f.push_back(monomial(static_cast<int>(i), static_cast<int>(j)));
                  return f;
                },
                [](const Params& P) {
                  const int zeros = (P.integer("alpha") == 0) + (P.integer("beta") == 0);
                  return Expectation{true, zeros};
                },
                [] {
                  std::vector<Params> g;
                  for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 3; ++b) g.push_back(num({{"alpha", a}, {"beta", b}}));
                  return g;
                }});

  cs.push_back({"case9", "alpha", true, [](const Params& P) { nat(P, "alpha"); },
                [](const Params& P) {
                  const long a = nat(P, "alpha");
                  return std::vector<LiftedOperator>{
                      op("p"), op("q"), op(fmt::format("x*p + y*q - {}", Q(make_rational(2 * a, 3)))), op("x*p - y*q"),
                      op("y*p"), op("x*q"), op(fmt::format("x^2*p + x*y*q - {}*x", a)), op(fmt::format("x*y*p + y^2*q - {}*y", a))};
                },
                [](const Params& P) { return submodule_family(FamilyKind::TotalDegree, num({{"m", P.at("alpha")}})).basis; },
                [](const Params& P) { return Expectation{true, P.integer("alpha") == 0 ? 1 : 0}; },
                [] {
                  std::vector<Params> g;
                  for (int a = 0; a <= 3; ++a) g.push_back(num({{"alpha", a}}));
                  return g;
                }});

  auto affine_ops = [](std::optional<Rational> alpha) {
    std::vector<LiftedOperator> ops{op("p"), op("q"), op("x*p - y*q"), op("y*p"), op("x*q")};
    if (alpha) ops.push_back(op(fmt::format("x*p + y*q - {}", Q(*alpha))));
    return ops;
  };
  cs.push_back({"case10", "m", false, [](const Params& P) { nat(P, "m"); },
                [affine_ops](const Params&) { return affine_ops(std::nullopt); },
                [](const Params& P) { return submodule_family(FamilyKind::TotalDegree, P).basis; },
                [](const Params& P) { return Expectation{true, P.integer("m") == 0 ? 1 : 0}; },
                [] {
                  std::vector<Params> g;
                  for (int m = 0; m <= 4; ++m) g.push_back(num({{"m", m}}));
                  return g;
                }});

  cs.push_back({"case11", "m, alpha", false,
                [](const Params& P) {
                  nat(P, "m");
                  P.at("alpha");
                },
                [affine_ops](const Params& P) { return affine_ops(P.at("alpha")); },
                [](const Params& P) { return submodule_family(FamilyKind::TotalDegree, P).basis; },
                [](const Params& P) { return Expectation{true, P.integer("m") == 0 && P.at("alpha") == 2 ? 1 : 0}; },
                [] {
                  std::vector<Params> g;
                  auto alphas = grid_alphas();
                  alphas.push_back(3);
                  for (const auto& a : alphas)
                    for (int m = 0; m <= 3; ++m) g.push_back(num({{"m", m}, {"alpha", a}}));
                  return g;
                }});

  auto c12_ops = [](const Params& P) {
    const Rational a = P.at("alpha");
    return std::vector<LiftedOperator>{op("p"), op("q"), op(fmt::format("2*x*p + {}", Q(a))),
                                       op(fmt::format("x^2*p - x*q + {}*x", Q(a)))};
  };
  auto c12_validate = [](const Params& P) {
    P.at("alpha");
    need_ms(P);
  };
  auto c12_grid = [] {
    std::vector<Params> g;
    for (const auto& a : grid_alphas())
      for (auto& s : subsets_of({0, 1, 2, 3}, 2)) g.push_back(with_ms(num({{"alpha", a}}), s));
    return g;
  };
  auto c12_h2 = [](const Params& P) {
    const Rational& a = P.at("alpha");
    return (a == 0 && P.ms.front() > 0) || a == 2 ? 1 : 0;
  };
  cs.push_back({"case12", "alpha, ms", false, c12_validate, c12_ops,
                [](const Params& P) { return family_sum(FamilyKind::Valpha, P); },
                [c12_h2](const Params& P) { return Expectation{true, c12_h2(P)}; }, c12_grid});
  cs.push_back({"case12-dual", "alpha, ms", false, c12_validate, c12_ops,
                [](const Params& P) { return family_sum(FamilyKind::ValphaDual, P); },
                [c12_h2](const Params& P) { return Expectation{P.at("alpha") == 0, c12_h2(P)}; }, c12_grid});

  cs.push_back({"case13", "m, pt", false,
                [](const Params& P) {
                  nat(P, "m");
                  if (!P.pt || P.pt->degree() < 1) throw BadParams("missing polynomial parameter pt");
                },
                [](const Params& P) {
                  const long m = nat(P, "m");
                  return std::vector<LiftedOperator>{op("p"), op(fmt::format("2*x*p - {}", m)), op(fmt::format("x^2*p - {}*x", m)),
                                                     op("q")};
                },
                [](const Params& P) { return submodule_family(FamilyKind::XiVpt, P).basis; },
                [](const Params& P) { return Expectation{true, P.integer("m") == 0 ? 1 : 0}; },
                [] {
                  std::vector<Params> g;
                  for (int m = 0; m <= 3; ++m)
                    for (const auto& rp : grid_polys()) {
                      Params q = num({{"m", m}});
                      q.pt = rp;
                      g.push_back(q);
                    }
                  return g;
                }});

  auto jet_ops = [](long n, const std::string& h, const std::string& f, std::vector<std::string> extra) {
    std::vector<LiftedOperator> ops{op("p"), op(h)};
    for (const auto& e : extra) ops.push_back(op(e));
    ops.push_back(op(f));
    for (long k = 0; k <= n; ++k) ops.push_back(op(fmt::format("x^{}*q", k)));
    return ops;
  };

  cs.push_back({"case17", "n, m, p", false,
                [](const Params& P) {
                  const long n = nat(P, "n", 1), m = nat(P, "m"), p = nat(P, "p");
                  if (n * p > m) throw BadParams("case17 needs n p <= m");
                },
                [jet_ops](const Params& P) {
                  const long n = nat(P, "n", 1), m = nat(P, "m");
                  return jet_ops(n, fmt::format("2*x*p + {}*y*q - {}", n, m), fmt::format("x^2*p + {}*x*y*q - {}*x", n, m), {});
                },
                [](const Params& P) { return submodule_family(FamilyKind::Vnmp, P).basis; },
                [](const Params& P) {
                  const long n = P.integer("n"), m = P.integer("m"), p = P.integer("p");
                  if (m == 0) return Expectation{true, n <= 2 ? 2 : 1};
                  if ((m + 2) % n != 0) return Expectation{true, 0};
                  const long k = (m + 2) / n;
                  const bool one = (p == k - 2 && k >= 2) || (p == k - 1 && n >= 2);
                  return Expectation{true, one ? 1 : 0};
                },
                [] {
                  std::vector<Params> g;
                  for (int n = 1; n <= 3; ++n)
                    for (int m = 0; m <= 8; ++m)
                      for (int p = 0; n * p <= m; ++p) g.push_back(num({{"n", n}, {"m", m}, {"p", p}}));
                  return g;
                }});

  cs.push_back({"case18", "n, alpha, beta, p", false,
                [](const Params& P) {
                  const long n = nat(P, "n"), p = nat(P, "p");
                  const Rational top = P.at("alpha") + n * P.at("beta");
                  if (!is_integer(top) || top < 0) throw BadParams("case18 needs alpha + n beta in N");
                  if (n * p > top) throw BadParams("case18 needs n p <= alpha + n beta");
                },
                [jet_ops](const Params& P) {
                  const long n = nat(P, "n");
                  const Rational a = P.at("alpha"), b = P.at("beta");
                  return jet_ops(n, fmt::format("2*x*p - {}", Q(a)), fmt::format("x^2*p + {}*x*y*q - {}*x", n, Q(a + n * b)),
                                 {fmt::format("y*q - {}", Q(b))});
                },
                [](const Params& P) { return submodule_family(FamilyKind::Case18, P).basis; },
                [](const Params& P) {
                  const long n = P.integer("n"), p = P.integer("p");
                  const Rational& a = P.at("alpha");
                  const Rational& b = P.at("beta");
                  bool one = false;
                  if (a == 0 && b == 0 && p == 0) one = true;
                  if (a == 0 && b == 0 && n == 0 && p > 0) one = true;
                  if (a == 0 && n == 0 && b == p + 1) one = true;
                  if (a == -2 && is_integer(b) && b >= 2 && b == p + 2) one = true;
                  if (a == -2 && is_integer(b) && b >= 1 && b == p + 1) one = true;
                  return Expectation{true, one ? 1 : 0};
                },
                [] {
                  std::vector<Params> g;
                  const std::vector<Rational> betas{0, 1, 2, 3, 4, make_rational(1, 2), -2, make_rational(3, 2)};
                  for (int n = 0; n <= 3; ++n)
                    for (const auto& a : grid_alphas())
                      for (const auto& b : betas) {
                        const Rational top = a + n * b;
                        if (!is_integer(top) || top < 0 || top > 8) continue;
                        for (int p = 0; n == 0 ? p <= 4 : n * p <= top; ++p)
                          g.push_back(num({{"n", n}, {"alpha", a}, {"beta", b}, {"p", p}}));
                      }
                  return g;
                }});

  auto legendre_case = [&](const std::string& id, FamilyKind kind, std::vector<std::string> fields) {
    cs.push_back({id, "ms", true, need_ms,
                  [fields](const Params&) {
                    std::vector<LiftedOperator> ops;
                    for (const auto& f : fields) ops.push_back(op(f));
                    return ops;
                  },
                  [kind](const Params& P) { return family_sum(kind, P); },
                  [](const Params&) { return Expectation{true, 1}; },
                  [] {
                    std::vector<Params> g;
                    for (auto& s : subsets_of({0, 1, 2}, 2)) g.push_back(with_ms(Params{}, s));
                    return g;
                  }});
  };
  legendre_case("case7'", FamilyKind::LegendrePlus,
                {"x*q - y*p", "(1 + x^2 - y^2)*p + 2*x*y*q", "2*x*y*p + (1 - x^2 + y^2)*q"});
  legendre_case("case7''", FamilyKind::LegendreMinus,
                {"x*q - y*p", "(1 - x^2 + y^2)*p - 2*x*y*q", "-2*x*y*p + (1 + x^2 - y^2)*q"});

  cs.push_back({"case8'", "alpha, beta", true,
                [](const Params& P) {
                  nat(P, "alpha");
                  P.at("beta");
                },
                [](const Params& P) {
                  const Rational a = P.at("alpha"), b = P.at("beta");
                  return std::vector<LiftedOperator>{
                      op("p"), op("q"), op(fmt::format("x*p + y*q - {}", Q(a))), op(fmt::format("x*q - y*p - {}", Q(b))),
                      op(fmt::format("(x^2 - y^2)*p + 2*x*y*q - 2*({}*x - {}*y)", Q(a), Q(b))),
                      op(fmt::format("-2*x*y*p + (x^2 - y^2)*q + 2*({}*y + {}*x)", Q(a), Q(b)))};
                },
                [](const Params& P) { return submodule_family(FamilyKind::Ball, P).basis; },
                [](const Params& P) {
                  return Expectation{P.at("beta") == 0, P.integer("alpha") == 0 ? 2 : 0};
                },
                [] {
                  std::vector<Params> g;
                  for (int a = 0; a <= 3; ++a)
                    for (const auto& b : {Rational(0), Rational(1), make_rational(1, 2)}) g.push_back(num({{"alpha", a}, {"beta", b}}));
                  return g;
                }});
  return cs;
}

}  // namespace

const std::vector<CohomologyCase>& cohomology_cases() {
  static const std::vector<CohomologyCase> cases = make_cases();
  return cases;
}

const CohomologyCase& find_case(std::string_view id) {
  for (const auto& c : cohomology_cases())
    if (c.id == id) return c;
  throw UnknownEntry("unknown cohomology case '" + std::string(id) + "'");
}

bool CohomologyReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CohomologyReport run_case(const CohomologyCase& c, const Params& params) {
  CohomologyReport rep;
  rep.case_id = c.id;
  rep.params = params.to_string();
  auto& checks = rep.checks;
  c.validate(params);
  const Expectation want = c.expected(params);

  PairAndModule pm;
  try {
    pm = build_pair_module_from_bundle(c.operators(params), c.module(params), Point{});
  } catch (const NotClosedUnderAction& ex) {
    checks.push_back({"module", !want.module_closed, ex.what()});
    return rep;
  }
  checks.push_back({"module", want.module_closed,
                    want.module_closed ? fmt::format("dim V = {}, dim V0 = {}", pm.module.dim_v, pm.module.dim_v0)
                                       : "closed, expected the action to leave the span"});
  if (!want.module_closed) return rep;
  rep.expected = want.h2;

  const auto rep_fail = pm.module.check(pm.pair);
  checks.push_back({"representation", !rep_fail, rep_fail.value_or("rho is a representation, V0 is g0-stable")});
  const int sub = pm.module.largest_submodule_in_v0();
  checks.push_back({"effective", pm.pair.is_effective() && sub == 0,
                    fmt::format("g0 has no nonzero ideal of g: {}; largest submodule in V0: {}", pm.pair.is_effective(), sub)});
  if (rep_fail) return rep;

  const RelativeComplex rc = relative_complex(pm.pair, pm.module);
  rep.dims = rc.cohomology();
  checks.push_back({"d^2 = 0", rc.dd_zero, rc.dd_zero ? "d1 d0 = 0, d2 d1 = 0" : "nonzero composite"});
  checks.push_back({"subcomplex", rc.subcomplex, rc.subcomplex ? "d preserves relative cochains" : "d leaves the relative cochains"});
  const bool exact = exactness_dim_check(pm.pair, pm.module);
  checks.push_back({"exactness", exact,
                    fmt::format("dim C^n(g,g0,V,V0) = {}, {}, {}, {}", rc.dims[0], rc.dims[1], rc.dims[2], rc.dims[3])});
  if (c.semisimple) {
    try {
      const int h1 = h1_quotient_shortcut(pm.pair, pm.module);
      checks.push_back({"shortcut", h1 == rep.dims[2], fmt::format("H^1(g0, V/V0) = {}", h1)});
    } catch (const NotSemisimple& ex) {
      checks.push_back({"shortcut", false, ex.what()});
    }
  }
  checks.push_back({"h2", rep.match(), fmt::format("h2 = {}, expected {}", rep.dims[2], want.h2)});
  return rep;
}

}  // namespace lievf

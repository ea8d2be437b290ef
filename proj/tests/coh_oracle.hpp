#pragma once

// Dense reference computation of dim H^n(g, g0, V, V0) for polynomial operators on the plane with a
// monomial module basis. Works in the operator basis: g0 and the relative cochains are kernels of
// evaluation maps, not coordinate subspaces. Shares only oracle.hpp with the tests.

#include <algorithm>
#include <vector>

#include "oracle.hpp"

namespace lievf::cohoracle {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

/// Null space basis of a row-major matrix with `cols` columns.
inline std::vector<Vec> nullspace(Mat rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

struct Operator {
  oracle::Field field;  // two components
  oracle::Poly scalar;
};

inline oracle::Poly act(const Operator& op, const oracle::Poly& f) {
  oracle::Poly r = oracle::apply(op.field, f);
  for (const auto& [k, c] : oracle::mul(op.scalar, f)) oracle::add_to(r, k, c);
  return r;
}

inline Rational at_origin(const oracle::Poly& f) {
  auto it = f.find(oracle::Key{0, 0, 0, 0, 0, 0});
  return it == f.end() ? Rational(0) : it->second;
}

struct Result {
  std::vector<int> h;  // h0, h1, h2
};

/// `module` lists monomials (a, b) for x^a y^b; the operators must preserve their span.
inline Result relative_cohomology(const std::vector<Operator>& ops, const std::vector<std::pair<long, long>>& module) {
  const std::size_t d = ops.size(), dv = module.size();

  // Structure constants from operator brackets, by solving in field coordinates.
  std::vector<oracle::Field> fields;
  for (const auto& o : ops) fields.push_back(o.field);
  Mat c(d * d, Vec(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<oracle::Field> all = fields;
      all.push_back(oracle::bracket(fields[i], fields[j]));
      auto coords = oracle::coordinates(all);
      // Solve sum_k x_k coords[k] = coords[d] via the null space of the transposed system.
      Mat sys(coords[0].size(), Vec(d + 1, Rational(0)));
      for (std::size_t k = 0; k <= d; ++k)
        for (std::size_t row = 0; row < coords[0].size(); ++row) sys[row][k] = coords[k][row];
      for (const auto& v : nullspace(sys, d + 1))
        if (v[d] != 0) {
          for (std::size_t k = 0; k < d; ++k) c[i * d + j][k] = -v[k] / v[d];
          break;
        }
    }

  // Action matrices: rho[a][u][t].
  std::vector<Mat> rho(d, Mat(dv, Vec(dv, Rational(0))));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t t = 0; t < dv; ++t) {
      const auto img = act(ops[a], oracle::monomial(module[t].first, module[t].second, 0));
      for (const auto& [k, v] : img)
        for (std::size_t u = 0; u < dv; ++u)
          if (k[0] == module[u].first && k[1] == module[u].second) rho[a][u][t] = v;
    }

  // g0 = kernel of evaluation of the fields at the origin.
  Mat ev(2, Vec(d, Rational(0)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t comp = 0; comp < 2; ++comp) ev[comp][a] = at_origin(fields[a][comp]);
  const auto g0 = nullspace(ev, d);
  std::vector<Rational> v_at0(dv);
  for (std::size_t t = 0; t < dv; ++t) v_at0[t] = (module[t].first == 0 && module[t].second == 0) ? 1 : 0;

  // Full cochains: value omega(e_{i1} < ... < e_{in}) component t at index set_index * dv + t.
  auto sets = [&](std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < d; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  std::vector<std::vector<std::vector<std::size_t>>> S;
  for (std::size_t n = 0; n <= 3; ++n) S.push_back(sets(n));
  auto find_set = [&](std::size_t n, std::vector<std::size_t> s, int& sign) -> long {
    sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
        if (s[j] > s[j + 1]) {
          std::swap(s[j], s[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1]) return -1;
    const auto& list = S[n];
    return std::find(list.begin(), list.end(), s) - list.begin();
  };

  // d_n as a dense matrix (rows C^{n+1}, cols C^n).
  auto differential = [&](std::size_t n) {
    Mat m(S[n + 1].size() * dv, Vec(S[n].size() * dv, Rational(0)));
    for (std::size_t ti = 0; ti < S[n + 1].size(); ++ti) {
      const auto& T = S[n + 1][ti];
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> rest = T;
        rest.erase(rest.begin() + static_cast<long>(i));
        int sg;
        const long s = find_set(n, rest, sg);
        const Rational sign = (i % 2 ? -1 : 1) * sg;
        for (std::size_t u = 0; u < dv; ++u)
          for (std::size_t t = 0; t < dv; ++t) m[ti * dv + u][static_cast<std::size_t>(s) * dv + t] += sign * rho[T[i]][u][t];
      }
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            const Rational& ck = c[T[i] * d + T[j]][k];
            if (ck == 0) continue;
            std::vector<std::size_t> args{k};
            for (std::size_t l = 0; l <= n; ++l)
              if (l != i && l != j) args.push_back(T[l]);
            int sg;
            const long s = find_set(n, args, sg);
            if (s < 0) continue;
            const Rational sign = ((i + j) % 2 ? -1 : 1) * sg;
            for (std::size_t u = 0; u < dv; ++u) m[ti * dv + u][static_cast<std::size_t>(s) * dv + u] += sign * ck;
          }
    }
    return m;
  };

  // Relative cochains: omega(u_1, ..., u_n) evaluated at the origin vanishes for u_k in g0.
  auto relative_basis = [&](std::size_t n) {
    const std::size_t full = S[n].size() * dv;
    Mat cond;
    std::vector<std::vector<std::size_t>> picks;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == n) {
        picks.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < g0.size(); ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& pick : picks) {
      Vec row(full, Rational(0));
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        Rational w = 1;
        for (std::size_t k = 0; k < n; ++k) w *= g0[pick[k]][idx[k]];
        if (w != 0) {
          int sg;
          const long s = find_set(n, idx, sg);
          if (s >= 0)
            for (std::size_t t = 0; t < dv; ++t) row[static_cast<std::size_t>(s) * dv + t] += w * sg * v_at0[t];
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == d) idx[k++] = 0;
        if (k == n) break;
      }
      cond.push_back(std::move(row));
    }
    return cond.empty() ? [&] {
      std::vector<Vec> id;
      for (std::size_t i = 0; i < full; ++i) {
        Vec v(full, Rational(0));
        v[i] = 1;
        id.push_back(std::move(v));
      }
      return id;
    }()
                        : nullspace(cond, full);
  };

  auto times = [](const Mat& m, const std::vector<Vec>& basis) {
    Mat cols;
    for (const auto& b : basis) {
      Vec col(m.size(), Rational(0));
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          if (b[j] != 0) col[i] += m[i][j] * b[j];
      cols.push_back(std::move(col));
    }
    return cols;  // images as rows
  };

  Result res;
  std::vector<int> dims, ranks;
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto basis = relative_basis(n);
    dims.push_back(static_cast<int>(basis.size()));
    ranks.push_back(basis.empty() ? 0 : oracle::rank(times(differential(n), basis)));
  }
  for (std::size_t n = 0; n <= 2; ++n) res.h.push_back(dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return res;
}

}  // namespace lievf::cohoracle

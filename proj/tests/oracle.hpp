#pragma once

// Independent reference arithmetic for tests: polynomial-exponential fields with integer
// weights and rational coefficients, stored as plain maps. Shares nothing with coeffring.

#include <array>
#include <map>
#include <vector>

#include "lievf/rational.hpp"

namespace lievf::oracle {

/// Key: exponents (a,b,c) then integer weights (u,v,w) for x^a y^b z^c e^{ux+vy+wz}.
using Key = std::array<long, 6>;
using Poly = std::map<Key, Rational>;
using Field = std::vector<Poly>;

inline void add_to(Poly& p, const Key& k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = p[k];
  slot += c;
  if (slot == 0) p.erase(k);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Key k;
      for (int i = 0; i < 6; ++i) k[static_cast<std::size_t>(i)] = ka[static_cast<std::size_t>(i)] + kb[static_cast<std::size_t>(i)];
      add_to(r, k, ca * cb);
    }
  return r;
}

inline Poly diff(const Poly& a, int axis) {
  Poly r;
  const auto e = static_cast<std::size_t>(axis);
  for (const auto& [k, c] : a) {
    if (k[e] > 0) {
      Key d = k;
      d[e] -= 1;
      add_to(r, d, c * k[e]);
    }
    if (k[e + 3] != 0) add_to(r, k, c * k[e + 3]);
  }
  return r;
}

inline Poly sub(Poly a, const Poly& b) {
  for (const auto& [k, c] : b) add_to(a, k, -c);
  return a;
}

inline Poly apply(const Field& x, const Poly& f) {
  Poly r;
  for (std::size_t j = 0; j < x.size(); ++j)
    for (const auto& [k, c] : mul(x[j], diff(f, static_cast<int>(j)))) add_to(r, k, c);
  return r;
}

inline Field bracket(const Field& x, const Field& y) {
  Field r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = sub(apply(x, y[k]), apply(y, x[k]));
  return r;
}

inline Poly monomial(long a, long b, long c, const Rational& coef = 1, long u = 0, long v = 0, long w = 0) {
  Poly p;
  add_to(p, Key{a, b, c, u, v, w}, coef);
  return p;
}

/// Rank of a list of vectors over Q by textbook Gaussian elimination.
inline int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[static_cast<std::size_t>(r)][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

/// Coordinates of fields over the union of their (component, key) supports.
inline std::vector<std::vector<Rational>> coordinates(const std::vector<Field>& fields) {
  std::map<std::pair<std::size_t, Key>, std::size_t> index;
  for (const auto& f : fields)
    for (std::size_t c = 0; c < f.size(); ++c)
      for (const auto& kv : f[c]) index.try_emplace({c, kv.first}, index.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) {
    std::vector<Rational> row(index.size(), Rational(0));
    for (std::size_t c = 0; c < f.size(); ++c)
      for (const auto& [k, v] : f[c]) row[index.at({c, k})] = v;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lievf::oracle

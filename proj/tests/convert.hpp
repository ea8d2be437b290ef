#pragma once

#include "lievf/vfield.hpp"
#include "oracle.hpp"

namespace lievf::testconv {

inline CoeffFn to_coeff(const oracle::Poly& p) {
  Terms t;
  for (const auto& [k, c] : p) {
    ExpMonomial m;
    for (int i = 0; i < 3; ++i) {
      m.exps[static_cast<std::size_t>(i)] = static_cast<int>(k[static_cast<std::size_t>(i)]);
      m.weight[static_cast<std::size_t>(i)] = Rational(k[static_cast<std::size_t>(i + 3)]);
    }
    t.add_term(m, c);
  }
  return CoeffFn(t);
}

inline VectorField to_field(const oracle::Field& f) {
  VectorField v(static_cast<int>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v[static_cast<int>(i)] = to_coeff(f[i]);
  return v;
}

}  // namespace lievf::testconv

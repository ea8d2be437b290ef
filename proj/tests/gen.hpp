#pragma once

#include <random>

#include "lievf/coeffring.hpp"
#include "lievf/vfield.hpp"

namespace lievf::testgen {

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rational(num(rng), den(rng));
}

inline ExpMonomial small_monomial(std::mt19937& rng, bool allow_weight) {
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<int> w(-2, 2);
  ExpMonomial m;
  for (int i = 0; i < 3; ++i) m.exps[i] = e(rng);
  if (allow_weight && rng() % 3 == 0) m.weight[rng() % 3] = make_rational(w(rng), 1 + static_cast<int>(rng() % 2));
  return m;
}

inline Terms small_terms(std::mt19937& rng, bool allow_weight, int max_terms = 3) {
  Terms t;
  int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int i = 0; i < n; ++i) t.add_term(small_monomial(rng, allow_weight), small_rational(rng));
  return t;
}

/// Random CoeffFn; one in four carries a small polynomial denominator.
inline CoeffFn small_coeff(std::mt19937& rng) {
  Terms num = small_terms(rng, true);
  if (rng() % 4 != 0) return CoeffFn(num);
  Terms den = small_terms(rng, false, 2) + Terms(Rational(1 + static_cast<int>(rng() % 3)));
  if (den.is_zero()) den = Terms(Rational(1));
  return CoeffFn::fraction(num, den);
}

inline VectorField small_field(std::mt19937& rng, int dim) {
  VectorField v(dim);
  for (int i = 0; i < dim; ++i)
    if (rng() % 3 != 0) v[i] = small_coeff(rng);
  return v;
}

}  // namespace lievf::testgen

#include <random>

#include "doctest.h"
#include "lievf/algstruct.hpp"
#include "lievf/dsl.hpp"

using namespace lievf;

namespace {

AbstractLieAlgebra realize(std::initializer_list<const char*> texts, int dim) {
  std::vector<VectorField> out;
  for (const char* t : texts) out.push_back(parse_field(t, dim));
  return AbstractLieAlgebra(lie_closure(out));
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Oracle: trace(ad x ad y) computed from explicit bracket loops.
Rational killing_oracle(const AbstractLieAlgebra& g, int i, int j) {
  Rational t = 0;
  for (int k = 0; k < g.dim(); ++k) {
    RationalVector inner = g.bracket(g.unit(j), g.unit(k));
    RationalVector outer = g.bracket(g.unit(i), inner);
    t += outer[static_cast<std::size_t>(k)];
  }
  return t;
}

}  // namespace

TEST_CASE("derived series and solvability") {
  auto sl2 = realize({"p", "2*x*p - q", "x^2*p - x*q"}, 2);
  CHECK(derived_series(sl2).dims() == std::vector<int>{3});
  CHECK_FALSE(is_solvable(sl2));
  auto e3 = realize({"p", "x*p + y*q", "q"}, 2);
  CHECK(derived_series(e3).dims() == std::vector<int>{3, 2, 0});
  CHECK(is_solvable(e3));
  CHECK(bracket_space(e3, Subspace::full(3), Subspace::full(3)) == Subspace::span(3, {rv({1, 0, 0}), rv({0, 0, 1})}));
  auto ab = realize({"p", "q"}, 2);
  CHECK(derived_series(ab).dims() == std::vector<int>{2, 0});
  CHECK(is_nilpotent(ab));
  CHECK_FALSE(is_nilpotent(e3));
}

TEST_CASE("Killing form") {
  auto sl2 = realize({"p", "2*x*p - q", "x^2*p - x*q"}, 2);
  QMatrix k = killing_matrix(sl2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(k(i, j) == killing_oracle(sl2, i, j));
  CHECK(determinant(k) != 0);
  CHECK(is_semisimple(sl2));
  CHECK(killing_matrix(realize({"p", "q"}, 2)).is_zero());
  auto solv = realize({"p", "q", "x*q"}, 2);
  CHECK(determinant(killing_matrix(solv)) == 0);
  // invariance K([x,y],z) + K(y,[x,z]) = 0
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        auto xy = sl2.bracket(sl2.unit(x), sl2.unit(y));
        auto xz = sl2.bracket(sl2.unit(x), sl2.unit(z));
        Rational s = 0;
        for (int i = 0; i < 3; ++i) s += xy[static_cast<std::size_t>(i)] * k(i, z) + xz[static_cast<std::size_t>(i)] * k(y, i);
        CHECK(s == 0);
      }
}

TEST_CASE("largest ideal inside a subspace") {
  auto g = realize({"p", "2*x*p", "x^2*p", "q"}, 2);
  Subspace s = Subspace::span(4, {rv({0, 1, 0, 0}), rv({0, 0, 1, 0}), rv({0, 0, 0, 1})});
  CHECK(largest_ideal_in(g, s) == Subspace::span(4, {rv({0, 0, 0, 1})}));
  auto sl2 = realize({"p", "2*x*p - q", "x^2*p - x*q"}, 2);
  CHECK(largest_ideal_in(sl2, Subspace::span(3, {rv({0, 1, 0}), rv({0, 0, 1})})).is_zero());
  auto ab = realize({"p", "q", "r"}, 3);
  Subspace t = Subspace::span(3, {rv({1, 1, 0})});
  CHECK(largest_ideal_in(ab, t) == t);
}

TEST_CASE("largest ideal agrees with exhaustive search over coordinate subspaces") {
  auto g = realize({"p", "q", "x*q", "x*p + y*q", "x^2*q"}, 2);
  const int n = g.dim();
  for (unsigned smask = 1; smask < (1u << n); ++smask) {
    std::vector<RationalVector> sv;
    for (int i = 0; i < n; ++i)
      if (smask & (1u << i)) sv.push_back(g.unit(i));
    Subspace s = Subspace::span(n, sv);
    Subspace ideal = largest_ideal_in(g, s);
    CHECK(is_ideal(g, ideal));
    CHECK(s.contains(ideal));
    for (unsigned sub = smask; sub; sub = (sub - 1) & smask) {
      std::vector<RationalVector> v;
      for (int i = 0; i < n; ++i)
        if (sub & (1u << i)) v.push_back(g.unit(i));
      Subspace cand = Subspace::span(n, v);
      if (is_ideal(g, cand)) CHECK(ideal.contains(cand));
    }
  }
}

TEST_CASE("center, radical, quotient, signature") {
  auto g = realize({"p", "q", "x*q"}, 2);  // Heisenberg: [p, xq] = q
  CHECK(center(g) == Subspace::span(3, {rv({0, 1, 0})}));
  CHECK(radical(g) == Subspace::full(3));
  auto gl2 = realize({"p", "2*x*p - q", "x^2*p - x*q", "x*p"}, 2);
  (void)gl2;
  auto sl2 = realize({"p", "2*x*p - q", "x^2*p - x*q"}, 2);
  CHECK(radical(sl2).is_zero());
  AbstractLieAlgebra q = quotient(g, center(g));
  CHECK(q.dim() == 2);
  CHECK(is_abelian(q, Subspace::full(2)));
  CHECK(signature(sl2).killing_rank == 3);
  CHECK(signature(g).center_dim == 1);
  CHECK_FALSE(g.check_identities());
}

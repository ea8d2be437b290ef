#include <random>

#include "convert.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "lievf/dsl.hpp"
#include "lievf/vfield.hpp"

using namespace lievf;
namespace o = lievf::oracle;

namespace {

// Planar fields in the oracle representation.
o::Field p2() { return {o::monomial(0, 0, 0), {}}; }
o::Field e2_field() { return {o::monomial(1, 0, 0, 2), o::monomial(0, 0, 0, -1)}; }   // 2xp - q
o::Field e3_field() { return {o::monomial(2, 0, 0), o::monomial(1, 0, 0, -1)}; }      // x^2p - xq

}  // namespace

TEST_CASE("bracket matches the Leibniz oracle on sl2 generators") {
  VectorField p = testconv::to_field(p2());
  VectorField e2 = testconv::to_field(e2_field());
  VectorField e3 = testconv::to_field(e3_field());
  CHECK(bracket(p, e3) == testconv::to_field(o::bracket(p2(), e3_field())));
  CHECK(bracket(p, e3) == e2);
  CHECK(bracket(e2, e3) == testconv::to_field(o::bracket(e2_field(), e3_field())));
  CHECK(bracket(e2, e3) == CoeffFn(2) * e3);
  CHECK(bracket(e3, e3).is_zero());
  CHECK_THROWS_AS(bracket(p, VectorField(3)), DimensionMismatch);
}

TEST_CASE("op_bracket and op_apply") {
  const Rational m(5);
  LiftedOperator d(parse_field("p", 2));
  LiftedOperator h(parse_field("2*x*p - q", 2), CoeffFn(-m));
  LiftedOperator br = op_bracket(d, h);
  CHECK(br.field == parse_field("2*p", 2));
  CHECK(br.scalar.is_zero());
  CHECK(op_bracket(h, h).field.is_zero());
  CHECK(op_bracket(h, h).scalar.is_zero());
  LiftedOperator a(parse_field("2*x*p - q", 2));
  LiftedOperator b(parse_field("x^2*p - x*q", 2));
  CHECK(op_bracket(a, b).field == parse_field("2*x^2*p - 2*x*q", 2));

  // (2x d_x - d_y)(x e^{my}) = (2 - m) x e^{my}, checked against the oracle derivative.
  o::Poly f = o::monomial(1, 0, 0, 1, 0, 5, 0);
  o::Poly expected = o::sub(o::mul(o::monomial(1, 0, 0, 2), o::diff(f, 0)), o::diff(f, 1));
  CHECK(op_apply(a, testconv::to_coeff(f)) == testconv::to_coeff(expected));
  CHECK(op_apply(a, testconv::to_coeff(f)) == CoeffFn(2 - m) * testconv::to_coeff(f));

  LiftedOperator rot(parse_field("x*p - y*q", 2), parse_function("-1/4"));
  CHECK(op_apply(rot, CoeffFn(1)) == CoeffFn(Rational(-1, 4)));
  CHECK(op_apply(LiftedOperator(parse_field("p", 1)), parse_function("x^2")) == parse_function("2*x"));
}

TEST_CASE("eval_field") {
  CHECK(eval_field(parse_field("x^2*p - x*q", 2), {0, 0, 0}) == std::vector<Rational>{0, 0});
  CHECK(eval_field(parse_field("x^2*p - x*q + exp(-2*y)*r", 3), {0, 0, 0}) == std::vector<Rational>{0, 0, 1});
  CHECK(eval_field(parse_field("p", 3), {7, 1, 2}) == std::vector<Rational>{1, 0, 0});
}

TEST_CASE("bracket properties on random fields") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int dim = 1 + static_cast<int>(rng() % 3);
    VectorField x = testgen::small_field(rng, dim);
    VectorField y = testgen::small_field(rng, dim);
    VectorField z = testgen::small_field(rng, dim);
    CHECK(bracket(x, y) == -bracket(y, x));
    CHECK(bracket(x, y + z) == bracket(x, y) + bracket(x, z));
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    LiftedOperator a(x, testgen::small_coeff(rng));
    LiftedOperator b(y, testgen::small_coeff(rng));
    CoeffFn f = testgen::small_coeff(rng);
    CHECK(op_apply(op_bracket(a, b), f) == op_apply(a, op_apply(b, f)) - op_apply(b, op_apply(a, f)));
    CHECK(op_bracket(LiftedOperator(x), LiftedOperator(y)).field == bracket(x, y));
  }
}

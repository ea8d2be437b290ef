#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "lievf/dsl.hpp"

using namespace lievf;

TEST_CASE("parse lowers to field, operator or function") {
  ParsedValue v = parse("x^2*p - x*q + exp(-2*y)*r");
  REQUIRE(std::holds_alternative<VectorField>(v));
  const auto& f = std::get<VectorField>(v);
  CHECK(f.dim() == 3);
  CHECK(f[0] == CoeffFn::variable(Axis::X) * CoeffFn::variable(Axis::X));
  CHECK(f[1] == -CoeffFn::variable(Axis::X));
  CHECK(f[2] == CoeffFn::exponential({0, -2, 0}));

  ParsedValue w = parse("2*x*p + y*q - 3");
  REQUIRE(std::holds_alternative<LiftedOperator>(w));
  const auto& op = std::get<LiftedOperator>(w);
  CHECK(op.field[0] == 2 * CoeffFn::variable(Axis::X));
  CHECK(op.field[1] == CoeffFn::variable(Axis::Y));
  CHECK(op.scalar == CoeffFn(-3));

  CHECK(std::holds_alternative<CoeffFn>(parse("(x^2 + y^2 - 1)/(x^2 + y^2 + 1)")));
  CHECK(parse_field("p", 3).dim() == 3);
}

TEST_CASE("syntax and semantic errors") {
  try {
    parse("x^^2");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 2);
  }
  CHECK_THROWS_AS(parse("2x"), SyntaxError);
  CHECK_THROWS_AS(parse("x +"), SyntaxError);
  CHECK_THROWS_AS(parse("(x"), SyntaxError);
  CHECK_THROWS_AS(parse("x^-1"), SemanticError);
  CHECK_THROWS_AS(parse("exp(p)"), SemanticError);
  CHECK_THROWS_AS(parse("exp(x + 1)"), SemanticError);
  CHECK_THROWS_AS(parse("exp(x^2)"), SemanticError);
  CHECK_THROWS_AS(parse("1/exp(x)"), SemanticError);
  CHECK_THROWS_AS(parse("p*q"), SemanticError);
  CHECK_THROWS_AS(parse("1/(x - x)"), SemanticError);
}

TEST_CASE("print canonical form") {
  CHECK(print(VectorField::coordinate(3, 0)) == "p");
  CHECK(print(parse("x^2*p - x*q + exp(-2*y)*r")) == "x^2*p - x*q + exp(-2*y)*r");
  CHECK(print(VectorField(3)) == "0");
  CHECK(print(parse("2*x*p + y*q - 3")) == "2*x*p + y*q - 3");
  CHECK(print(parse("1/2*x*exp(1/3*x - y)")) == "1/2*x*exp(1/3*x - y)");
  CHECK(print(parse("q*(x+1) + 3*x^2*y*q")) == "3*x^2*y*q + x*q + q");
}

TEST_CASE("round trip on random values") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    int dim = 1 + static_cast<int>(rng() % 3);
    VectorField f = testgen::small_field(rng, dim);
    ParsedValue back = parse(print(f), dim);
    if (f.is_zero()) {
      CHECK(print(back) == "0");
      continue;
    }
    REQUIRE(std::holds_alternative<VectorField>(back));
    CHECK(std::get<VectorField>(back).embedded(std::max(dim, std::get<VectorField>(back).dim())) ==
          f.embedded(std::max(dim, std::get<VectorField>(back).dim())));
    CoeffFn c = testgen::small_coeff(rng);
    CHECK(parse_function(print(c)) == c);
    CHECK(print(parse_function(print(c))) == print(c));
  }
}

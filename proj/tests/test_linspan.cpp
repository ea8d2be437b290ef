#include "convert.hpp"
#include "doctest.h"
#include "lievf/dsl.hpp"
#include "lievf/linspan.hpp"

using namespace lievf;

namespace {

std::vector<VectorField> fields(std::initializer_list<const char*> texts, int dim) {
  std::vector<VectorField> out;
  for (const char* t : texts) out.push_back(parse_field(t, dim));
  return out;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("span_reduce") {
  CHECK(span_reduce(fields({"p", "2*p", "q"}, 2)).dim() == 2);
  CHECK(span_reduce(fields({"p", "2*p", "q"}, 2)).source_index() == std::vector<int>{0, 2});
  auto sl2 = fields({"p", "2*x*p - q", "x^2*p - x*q"}, 2);
  CHECK(span_reduce(sl2).dim() == 3);
  // independent oracle: rank over flattened coordinates
  namespace o = lievf::oracle;
  std::vector<o::Field> ofs = {{o::monomial(0, 0, 0), {}},
                               {o::monomial(1, 0, 0, 2), o::monomial(0, 0, 0, -1)},
                               {o::monomial(2, 0, 0), o::monomial(1, 0, 0, -1)}};
  CHECK(o::rank(o::coordinates(ofs)) == 3);
  CHECK(span_reduce({}).dim() == 0);
  auto reduced = span_reduce(sl2);
  CHECK(span_reduce(reduced.basis()).basis() == reduced.basis());
}

TEST_CASE("span_contains") {
  auto a = span_reduce(fields({"p", "2*x*p - q", "x^2*p - x*q"}, 2));
  CHECK(span_contains(a, parse_field("2*x*p - q", 2)) == rv({0, 1, 0}));
  CHECK_FALSE(span_contains(a, parse_field("x*p", 2)));
  CHECK(span_contains(a, VectorField(2)) == rv({0, 0, 0}));
  auto c = span_contains(a, parse_field("3*p + x^2*p - x*q", 2));
  REQUIRE(c);
  CHECK(a.combination(*c) == parse_field("3*p + x^2*p - x*q", 2));
}

TEST_CASE("span with denominators") {
  auto a = span_reduce(fields({"1/(x+1)*p", "x/(x+1)*p"}, 1));
  CHECK(a.dim() == 2);
  CHECK(span_contains(a, parse_field("p", 1)) == rv({1, 1}));
  CHECK(span_contains(a, parse_field("1/(x^2 - 1)*p", 1)) == std::nullopt);
  CHECK(span_contains(a, parse_field("(x - 1)/(x^2 - 1)*p", 1)) == rv({1, 0}));
}

TEST_CASE("lie_closure with structure constants") {
  auto a = lie_closure(fields({"p", "2*x*p - q", "x^2*p - x*q"}, 2));
  REQUIRE(a.dim() == 3);
  const auto& c = a.structure();
  CHECK(c[0][1] == rv({2, 0, 0}));
  CHECK(c[0][2] == rv({0, 1, 0}));
  CHECK(c[1][2] == rv({0, 0, 2}));
  CHECK(c[1][0] == rv({-2, 0, 0}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a.combination(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == bracket(a[i], a[j]));
}

TEST_CASE("lie_closure reports the witness for the printed B1 list") {
  auto verbatim = fields({"p", "2*p - q", "x^2*p - x*q + exp(-2*y)*r"}, 3);
  try {
    lie_closure(verbatim);
    FAIL("expected ClosureFailure");
  } catch (const ClosureFailure& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 2);
    CHECK(e.bracket_field == parse_field("2*x*p - q", 3));
  }
  CHECK(lie_closure(fields({"p", "2*x*p - q", "x^2*p - x*q + exp(-2*y)*r"}, 3)).dim() == 3);
}

TEST_CASE("lie_saturate grows to the closure") {
  auto a = lie_saturate(fields({"p", "x^2*p - x*q"}, 2));
  CHECK(a.dim() == 3);
  CHECK(a.has_structure());
  CHECK_THROWS_AS(lie_saturate(fields({"p", "x^3*p"}, 1), 4), Error);
}

TEST_CASE("FunctionSpan coordinates") {
  FunctionSpan s({parse_function("exp(2*y)"), parse_function("x*exp(2*y)"), parse_function("x^2*exp(2*y)")});
  CHECK(s.dim() == 3);
  CHECK(s.coordinates(parse_function("(3 - x^2)*exp(2*y)")) == rv({3, 0, -1}));
  CHECK_FALSE(s.coordinates(parse_function("exp(y)")));
}

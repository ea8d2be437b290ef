#include <doctest.h>

#include "lievf/catalog.hpp"
#include "lievf/dsl.hpp"
#include "lievf/linspan.hpp"
#include "lievf/verify.hpp"

using namespace lievf;

namespace {

bool same_span(const std::vector<CoeffFn>& got, const std::vector<std::string>& want) {
  FunctionSpan s(got);
  if (s.dim() != static_cast<int>(got.size()) || got.size() != want.size()) return false;
  for (const auto& w : want)
    if (!s.coordinates(parse_function(w))) return false;
  return true;
}

}  // namespace

TEST_CASE("rotation algebra of the plane") {
  const auto a = lie_closure(construct_entry("planar-6", Params{}));
  CHECK(a.dim() == 3);
  CHECK(verify_entry(find_entry("planar-6"), Params{}).pass());
}

TEST_CASE("parametrized entries close at their declared dimension") {
  const auto p = Params::parse("m=2,n=1,p=1");
  const auto& e = find_entry("C9a");
  CHECK(e.expected_dim(p) == 10);
  CHECK(lie_closure(e.build(p, false)).dim() == 10);

  const auto q = Params::parse("pt=t^2");
  const auto& planar = find_entry("planar-1");
  CHECK(lie_closure(planar.build(q, false)).dim() == planar.expected_dim(q));
}

TEST_CASE("module families") {
  CHECK(same_span(family_sum(FamilyKind::Vm, Params::parse("ms=2")), {"exp(2*y)", "x*exp(2*y)", "x^2*exp(2*y)"}));
  CHECK(same_span(submodule_family(FamilyKind::Vnm, Params::parse("m=0,n=1")).basis, {"x", "1"}));
  CHECK(same_span(submodule_family(FamilyKind::Vnm, Params::parse("m=1,n=0")).basis,
                  {"x + x^2*y", "1 + 2*x*y", "y"}));
  CHECK(same_span(submodule_family(FamilyKind::TotalDegree, Params::parse("m=1")).basis, {"1", "x", "y"}));
  CHECK(family_dim(FamilyKind::LegendrePlus, Params::parse("n=1")) == 3);
  CHECK(submodule_family(FamilyKind::LegendrePlus, Params::parse("n=1")).basis.size() == 3);
  CHECK(family_sum_dim(FamilyKind::Vm, Params::parse("ms=0;2")) == 4);
}

TEST_CASE("Legendre polynomials") {
  using V = std::vector<Rational>;
  CHECK(legendre(0).coeffs() == V{1});
  CHECK(legendre(1).coeffs() == V{0, 1});
  CHECK(legendre(2).coeffs() == V{make_rational(-1, 2), 0, make_rational(3, 2)});
  CHECK(legendre(3).coeffs() == V{0, make_rational(-3, 2), 0, make_rational(5, 2)});
}

TEST_CASE("lift of a planar algebra to 3-space") {
  const auto g = dseries_lift("planar-6", Params{});
  REQUIRE(g.size() == 6);
  CHECK(g[3] == parse_field("r", 3));
  CHECK(g[5] == parse_field("z^2*r", 3));
  CHECK(lie_closure(g).dim() == 6);
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(construct_entry("A1", Params::parse("pt=t")), BadParams);
  CHECK_THROWS_AS(construct_entry("C9a", Params::parse("m=1,n=1,p=2")), BadParams);
  CHECK_THROWS_AS(construct_entry("planar-1", Params{}), BadParams);
  CHECK_THROWS_AS(find_entry("planar-99"), UnknownEntry);
  CHECK_THROWS_AS(Params::parse("m=1,,n"), BadParams);
  CHECK(Params::parse("n=1,m=2,alpha=1/2").to_string() == "alpha=1/2,m=2,n=1");
}

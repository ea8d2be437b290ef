#include "doctest.h"
#include "lievf/dsl.hpp"
#include "lievf/geometry.hpp"

using namespace lievf;

namespace {

SpannedAlgebra closed(std::initializer_list<const char*> texts, int dim) {
  std::vector<VectorField> out;
  for (const char* t : texts) out.push_back(parse_field(t, dim));
  return lie_closure(out);
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> r;
  for (auto row : rows) r.push_back(rv(row));
  return QMatrix::from_rows(r, static_cast<int>(r.front().size()));
}

}  // namespace

TEST_CASE("transitivity rank") {
  auto b1 = closed({"p", "2*x*p - q", "x^2*p - x*q + exp(-2*y)*r"}, 3);
  CHECK(transitivity_rank(b1, {0, 0, 0}) == 3);
  auto e7 = closed({"p", "x*q", "-q"}, 2);
  CHECK(transitivity_rank(e7, {0, 0, 0}) == 2);
  CHECK(transitivity_rank(SpannedAlgebra(2), {0, 0, 0}) == 0);
}

TEST_CASE("isotropy of sl2 on the line bundle") {
  auto a = closed({"p", "2*x*p - q", "x^2*p - x*q"}, 2);
  IsotropyData iso = isotropy_at(a);
  CHECK(iso.base_point == Point{0, 0, 0});
  CHECK(iso.isotropy == Subspace::span(3, {rv({0, 0, 1})}));
  CHECK(iso.rep_matrices.size() == 1);
}

TEST_CASE("isotropy of the rotation algebra") {
  auto a = closed({"p", "q", "r", "x*q - y*p", "x*r - z*p", "y*r - z*q"}, 3);
  IsotropyData iso = isotropy_at(a);
  CHECK(iso.isotropy.dim() == 3);
  CHECK(iso.isotropy == Subspace::span(6, {rv({0, 0, 0, 1, 0, 0}), rv({0, 0, 0, 0, 1, 0}), rv({0, 0, 0, 0, 0, 1})}));
  // x.(y + g0) = [x, y] + g0 with y in {p, q, r}: [xq - yp, p] = q... so rho(xq - yp) maps e_x -> -e_y.
  CHECK(iso.rep_matrices[0] == qm({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
  for (const auto& m : iso.rep_matrices) CHECK(m == -1 * m.transpose());
  LineReport lines = invariant_lines(iso.rep_matrices);
  CHECK_FALSE(lines.has_lines());
  CHECK(lines.empty_certified);
}

TEST_CASE("invariant lines of commuting diagonal matrices") {
  LineReport r = invariant_lines({qm({{1, 0}, {0, 2}}), qm({{3, 0}, {0, 4}})});
  REQUIRE(r.rational_lines.size() == 2);
  CHECK(r.rational_lines[0] == rv({1, 0}));
  CHECK(r.rational_lines[1] == rv({0, 1}));
  CHECK(r.complete());
}

TEST_CASE("quadratic eigenlines and scalar families") {
  LineReport r = invariant_lines({qm({{0, 2}, {1, 0}})});
  CHECK(r.rational_lines.empty());
  CHECK(r.quadratic_lines.size() == 2);
  CHECK(r.quadratic_lines[0].d == 2);
  LineReport rot = invariant_lines({qm({{0, -1}, {1, 0}})});
  CHECK(rot.quadratic_lines.size() == 2);
  CHECK(rot.quadratic_lines[0].d == -1);
  LineReport fam = invariant_lines({qm({{2, 0, 0}, {0, 2, 0}, {0, 0, 5}})});
  CHECK(fam.families.size() == 1);
  CHECK(fam.rational_lines.size() == 1);
}

TEST_CASE("certificate needs a common zero to fail") {
  // upper triangular 3x3 has e1 invariant; the certificate must not claim emptiness
  CHECK_FALSE(certify_no_common_line({qm({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})}));
  CHECK(certify_no_common_line({qm({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}), qm({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}})}));
}

TEST_CASE("characteristic polynomial and roots") {
  UPoly cp = characteristic_polynomial(qm({{2, 1}, {0, 3}}));
  CHECK(cp == UPoly({Rational(6), Rational(-5), Rational(1)}));
  CHECK(rational_roots(cp) == std::vector<Rational>{2, 3});
  auto f = split_rational_roots(UPoly({Rational(0), Rational(0), Rational(2), Rational(2), Rational(4)}));
  CHECK(f.roots.size() == 1);
  CHECK(f.roots[0].second == 2);
  CHECK(f.rest.degree() == 2);
  auto [d, s] = squarefree_part(Rational(-12, 25));
  CHECK(d == -3);
  CHECK(s == Rational(2, 5));
}

TEST_CASE("foliation classifier on small examples") {
  // sl2 on the line bundle with the fiber r: B-type when twisted by exp(-2y)
  auto b1 = closed({"p", "2*x*p - q", "x^2*p - x*q + exp(-2*y)*r"}, 3);
  IsotropyData iso = isotropy_at(b1);
  REQUIRE(is_invariant_tangent(iso, b1, rv({0, 0, 1})));
  CHECK(classify_foliation(b1, iso, rv({0, 0, 1})).tag == FoliationCase::B);

  auto c1c = closed({"p", "2*x*p - q", "x^2*p - x*q + exp(-2*y)*r", "r"}, 3);
  IsotropyData iso2 = isotropy_at(c1c);
  FoliationReport rep = classify_foliation(c1c, iso2, rv({0, 0, 1}));
  CHECK(rep.tag == FoliationCase::C1);
  CHECK(rep.ideal.dim() == 1);

  auto c2 = closed({"p", "2*x*p - q", "x^2*p - x*q", "r", "z*r"}, 3);
  CHECK(classify_foliation(c2, isotropy_at(c2), rv({0, 0, 1})).tag == FoliationCase::C2);

  auto d = closed({"p", "2*x*p - q", "x^2*p - x*q", "r", "z*r", "z^2*r"}, 3);
  CHECK(classify_foliation(d, isotropy_at(d), rv({0, 0, 1})).tag == FoliationCase::D);
}

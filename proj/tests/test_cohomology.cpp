#include <doctest.h>

#include "coh_oracle.hpp"
#include "lievf/cohomology.hpp"
#include "lievf/dsl.hpp"

using namespace lievf;
namespace co = lievf::cohoracle;

namespace {

oracle::Poly mono(long a, long b, const Rational& c = 1) { return oracle::monomial(a, b, 0, c); }

oracle::Poly constant(const Rational& c) {
  return c == 0 ? oracle::Poly{} : mono(0, 0, c);
}

co::Operator oper(oracle::Poly px, oracle::Poly py, oracle::Poly scalar) {
  return {oracle::Field{std::move(px), std::move(py)}, std::move(scalar)};
}

/// sl2 x sl2 acting on x^i y^j, i <= a, j <= b.
std::vector<co::Operator> product_ops(long a, long b) {
  return {oper(mono(0, 0), {}, {}),
          oper(mono(1, 0, 2), {}, constant(-a)),
          oper(mono(2, 0), {}, mono(1, 0, -a)),
          oper({}, mono(0, 0), {}),
          oper({}, mono(0, 1, 2), constant(-b)),
          oper({}, mono(0, 2), mono(0, 1, -b))};
}

std::vector<std::pair<long, long>> rectangle(long a, long b) {
  std::vector<std::pair<long, long>> m;
  for (long j = 0; j <= b; ++j)
    for (long i = 0; i <= a; ++i) m.emplace_back(i, j);
  return m;
}

Params with(std::map<std::string, Rational> num, std::vector<int> ms = {}) {
  Params p;
  p.num = std::move(num);
  p.ms = std::move(ms);
  return p;
}

PairAndModule bundle(const std::string& id, const Params& p) {
  const auto& c = find_case(id);
  return build_pair_module_from_bundle(c.operators(p), c.module(p), Point{});
}

}  // namespace

TEST_CASE("product of two sl2 copies agrees with the dense oracle") {
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto pm = bundle("case8", with({{"alpha", a}, {"beta", b}}));
      const auto lib = cohomology_dims(pm.pair, pm.module);
      const auto ref = co::relative_cohomology(product_ops(a, b), rectangle(a, b));
      CHECK(lib == ref.h);
    }
}

TEST_CASE("twisted points of the product case have no second cohomology") {
  // H^1 of the Borel product with a character nontrivial on the second factor vanishes.
  for (auto [a, b] : {std::pair<long, long>{0, 1}, {0, 2}, {1, 0}}) {
    const auto ref = co::relative_cohomology(product_ops(a, b), rectangle(a, b));
    const auto pm = bundle("case8", with({{"alpha", a}, {"beta", b}}));
    CHECK(ref.h[2] == 0);
    CHECK(cohomology_dims(pm.pair, pm.module)[2] == 0);
  }
  const auto pm = bundle("case8", with({{"alpha", 0}, {"beta", 0}}));
  CHECK(cohomology_dims(pm.pair, pm.module)[2] == 2);
}

TEST_CASE("affine algebra with Euler weight agrees with the dense oracle") {
  for (long a = 0; a <= 2; ++a) {
    CAPTURE(a);
    const Rational w = make_rational(2 * a, 3);
    std::vector<co::Operator> ops{oper(mono(0, 0), {}, {}),
                                  oper({}, mono(0, 0), {}),
                                  oper(mono(1, 0), mono(0, 1), constant(-w)),
                                  oper(mono(1, 0), mono(0, 1, -1), {}),
                                  oper(mono(0, 1), {}, {}),
                                  oper({}, mono(1, 0), {}),
                                  oper(mono(2, 0), mono(1, 1), mono(1, 0, -a)),
                                  oper(mono(1, 1), mono(0, 2), mono(0, 1, -a))};
    std::vector<std::pair<long, long>> module;
    for (long d = 0; d <= a; ++d)
      for (long i = 0; i <= d; ++i) module.emplace_back(i, d - i);
    const auto pm = bundle("case9", with({{"alpha", a}}));
    CHECK(cohomology_dims(pm.pair, pm.module) == co::relative_cohomology(ops, module).h);
  }
}

TEST_CASE("module must be closed under the operators") {
  const auto& c = find_case("case8");
  const auto ops = c.operators(with({{"alpha", 1}, {"beta", 0}}));
  CHECK_THROWS_AS(build_pair_module_from_bundle(ops, {CoeffFn(1)}, Point{}), NotClosedUnderAction);
}

TEST_CASE("complex invariants") {
  const auto pm = bundle("case6", with({}, {0}));
  const auto rc = relative_complex(pm.pair, pm.module);
  CHECK(rc.dd_zero);
  CHECK(rc.subcomplex);
  CHECK(rc.cohomology() == std::vector<int>{0, 0, 1});
  CHECK(rc.h2_representatives.size() == 1);
  CHECK(exactness_dim_check(pm.pair, pm.module));
}

TEST_CASE("extensions") {
  const auto pm = bundle("case6", with({}, {0}));
  const auto rc = relative_complex(pm.pair, pm.module);
  const int d = pm.pair.dim(), dv = pm.module.dim_v, d0 = pm.pair.d0, dv0 = pm.module.dim_v0;

  SUBCASE("zero cocycle is the semidirect product") {
    const auto ext = build_extension(pm.pair, pm.module, std::vector<Rational>(rc.h2_representatives[0].size(), 0));
    CHECK(ext.dim() == d + dv);
    CHECK(ext.d0 == d0 + dv0);
    CHECK_FALSE(ext.algebra.check_identities());
    std::vector<int> v_index;
    for (int t = 0; t < dv0; ++t) v_index.push_back(d0 + t);
    for (int t = dv0; t < dv; ++t) v_index.push_back(d + t);
    for (int i : v_index)
      for (int j : v_index)
        for (int k = 0; k < d + dv; ++k) CHECK(ext.algebra.c(i, j, k) == 0);
  }

  SUBCASE("a non-closed cochain is rejected") {
    const auto big = bundle("case8", with({{"alpha", 0}, {"beta", 0}}));
    const std::size_t size = relative_complex(big.pair, big.module).h2_representatives[0].size();
    bool rejected = false;
    for (std::size_t i = 0; i < size && !rejected; ++i) {
      std::vector<Rational> w(size, 0);
      w[i] = 1;
      try {
        build_extension(big.pair, big.module, w);
      } catch (const NotACocycle&) {
        rejected = true;
      }
    }
    CHECK(rejected);
  }

  SUBCASE("the class matches the twisted realization only") {
    const auto real = lie_closure(construct_entry("C1c", with({}, {0})));
    CHECK(match_extension(pm.pair, pm.module, rc.h2_representatives[0], real, Point{}).found);
    CHECK_FALSE(match_extension(pm.pair, pm.module, std::vector<Rational>(rc.h2_representatives[0].size(), 0), real,
                                Point{})
                    .found);
  }
}

TEST_CASE("H^1 of the isotropy with values in V/V0") {
  auto h1 = [](long a) {
    const auto pm = bundle("case9", with({{"alpha", a}}));
    return h1_quotient_shortcut(pm.pair, pm.module);
  };
  CHECK(h1(0) == 1);
  CHECK(h1(1) == 0);
  const auto pm = bundle("case10", with({{"m", 1}}));
  CHECK_THROWS_AS(h1_quotient_shortcut(pm.pair, pm.module), NotSemisimple);
}

TEST_CASE("invariant cocycle solver") {
  CHECK(case13_cocycle_space(2, 1, 4).dimension == 1);
  CHECK(case13_cocycle_space(2, 1, 6).dimension == 0);
  CHECK(case13_cocycle_space(1, 2, 2).dimension == 1);
  CHECK(case13_cocycle_space(1, 1, 1).dimension == 1);
  CHECK(case13_cocycle_space(3, 1, 7).dimension == 1);
  CHECK(case13_cocycle_space(3, 1, 6).dimension == 0);
  const auto s = case13_cocycle_space(2, 1, 4);
  CHECK(s.jacobi_ok == std::optional<bool>(true));
  CHECK(s.closed_form_ok == std::optional<bool>(true));
  CHECK_FALSE(case13_cocycle_space(2, 1, 6).jacobi_ok.has_value());
  CHECK_THROWS_AS(case13_cocycle_space(0, 1, 1), BadParams);
  CHECK_THROWS_AS(case13_cocycle_space(2, 2, 3), BadParams);
}

TEST_CASE("case registry") {
  CHECK_THROWS_AS(find_case("case99"), UnknownEntry);
  for (const auto& c : cohomology_cases()) {
    CAPTURE(c.id);
    CHECK_FALSE(c.grid().empty());
  }
  const auto r = run_case(find_case("case8"), with({{"alpha", 0}, {"beta", 0}}));
  CHECK(r.dims == std::vector<int>{0, 0, 2});
  CHECK(r.pass());
}

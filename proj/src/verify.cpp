#include "lievf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lievf/algstruct.hpp"
#include "lievf/dsl.hpp"

namespace lievf {

const char* tool_version() { return "lievf 0.1.0"; }

bool VerificationReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string closure_witness(const VectorField& a, const VectorField& b, const VectorField& c) {
  return "[" + print(a) + ", " + print(b) + "] = " + print(c) + " not in span";
}

ClosureOutcome try_closure(const std::vector<VectorField>& gens) {
  ClosureOutcome out;
  try {
    out.algebra = lie_closure(gens);
  } catch (const ClosureFailure& f) {
    out.witness = closure_witness(gens[static_cast<std::size_t>(f.i)], gens[static_cast<std::size_t>(f.j)],
                                  f.bracket_field);
  }
  return out;
}

ClassifyResult classify_entry(const SpannedAlgebra& a, Shape shape) {
  ClassifyResult r;
  r.isotropy = isotropy_at(a);
  if (shape == Shape::NoInvariantLine)
    r.lines = invariant_lines(r.isotropy.rep_matrices);
  else if (shape != Shape::Planar)
    r.foliation = classify_foliation(a, r.isotropy, RationalVector{0, 0, 1});
  return r;
}

namespace {

Check foliation_check(const SpannedAlgebra& a, const CatalogEntry& e, const IsotropyData& iso) {
  Check c{"foliation", false, ""};
  if (e.shape == Shape::NoInvariantLine) {
    LineReport lr = invariant_lines(iso.rep_matrices);
    c.pass = !lr.has_lines() && lr.complete();
    c.detail = lr.has_lines() ? "isotropy representation has an invariant line"
                              : (lr.complete() ? "no invariant line; " + lr.certificate : "unresolved factors");
    return c;
  }
  const RationalVector tangent{0, 0, 1};
  if (!is_invariant_tangent(iso, a, tangent)) {
    c.detail = "the line of d/dz is not invariant under the isotropy";
    return c;
  }
  try {
    FoliationReport fr = classify_foliation(a, iso, tangent);
    const std::string got = to_string(fr.tag);
    const std::string want = to_string(e.shape);
    c.pass = got == want;
    c.detail = "tag " + got + (c.pass ? "" : ", expected " + want) + ", ideal dim " +
               std::to_string(fr.ideal.dim());
  } catch (const UnrecognizedIdealShape& ex) {
    c.detail = ex.what();
  }
  return c;
}

}  // namespace

VerificationReport verify_entry(const CatalogEntry& e, const Params& params, bool verbatim) {
  VerificationReport rep;
  rep.entry = e.id;
  rep.params = params.to_string();
  rep.verbatim = verbatim;
  auto& checks = rep.checks;

  try {
    e.validate(params);
    checks.push_back({"params", true, rep.params});
  } catch (const BadParams& ex) {
    checks.push_back({"params", false, ex.what()});
    return rep;
  }
  std::vector<VectorField> gens;
  try {
    gens = e.build(params, verbatim);
  } catch (const Error& ex) {
    checks.push_back({"construction", false, ex.what()});
    return rep;
  }
  ClosureOutcome co = try_closure(gens);
  if (!co.algebra) {
    checks.push_back({"closure", false, co.witness});
    return rep;
  }
  const SpannedAlgebra& a = *co.algebra;
  checks.push_back({"closure", true, std::to_string(gens.size()) + " generators closed"});
  const int want = e.expected_dim(params);
  checks.push_back({"dimension", a.dim() == want,
                    "dim " + std::to_string(a.dim()) + (a.dim() == want ? "" : ", expected " + std::to_string(want))});

  IsotropyData iso;
  try {
    iso = isotropy_at(a);
  } catch (const NoGoodPoint& ex) {
    checks.push_back({"transitivity", false, ex.what()});
    return rep;
  }
  std::string pt;
  for (int i = 0; i < e.space_dim; ++i) pt += (i ? "," : "") + to_string(iso.base_point[static_cast<std::size_t>(i)]);
  checks.push_back({"transitivity", iso.rank == e.space_dim,
                    "rank " + std::to_string(iso.rank) + " at (" + pt + ")"});

  const bool solv = is_solvable(AbstractLieAlgebra(a));
  checks.push_back({"solvability", solv == e.solvable, solv ? "solvable" : "non-solvable"});

  if (e.shape != Shape::Planar && iso.rank == e.space_dim) checks.push_back(foliation_check(a, e, iso));
  return rep;
}

std::vector<VerificationReport> verify_all(Grid grid, int jobs) {
  struct Task {
    const CatalogEntry* entry;
    Params params;
  };
  std::vector<Task> tasks;
  for (const auto& e : catalog())
    for (auto& p : e.grid(grid)) tasks.push_back({&e, std::move(p)});
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = verify_entry(*tasks[i].entry, tasks[i].params);
  };
  const int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace lievf

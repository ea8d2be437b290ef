#pragma once

// Per-entry verification: construction, closure, dimension, transitivity, solvability, foliation.

#include <optional>
#include <string>
#include <vector>

#include "lievf/catalog.hpp"
#include "lievf/geometry.hpp"
#include "lievf/linspan.hpp"

namespace lievf {

struct Check {
  std::string name;
  bool pass = false;
  /// What was observed; for failures, the witness.
  std::string detail;
};

struct VerificationReport {
  std::string entry;
  std::string params;
  bool verbatim = false;
  std::vector<Check> checks;

  bool pass() const;
};

/// "[A, B] = C not in span" for generators a, b.
std::string closure_witness(const VectorField& a, const VectorField& b, const VectorField& c);

/// Closure of a generator list; on failure the witness names the offending bracket.
struct ClosureOutcome {
  std::optional<SpannedAlgebra> algebra;
  std::string witness;
};
ClosureOutcome try_closure(const std::vector<VectorField>& gens);

VerificationReport verify_entry(const CatalogEntry& entry, const Params& params, bool verbatim = false);

/// Every grid point of every entry, in catalog order. `jobs` > 1 runs points concurrently.
std::vector<VerificationReport> verify_all(Grid grid, int jobs = 1);

/// Invariant line report for an entry: the tangent (0,0,1) check for B/C/D shapes, the
/// no-line certificate for primitive ones.
struct ClassifyResult {
  IsotropyData isotropy;
  std::optional<FoliationReport> foliation;
  std::optional<LineReport> lines;
};
ClassifyResult classify_entry(const SpannedAlgebra& a, Shape shape);

const char* tool_version();

}  // namespace lievf

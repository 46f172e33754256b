#pragma once

// Axiom validators for the dual spaces and their morphisms.  Violations are
// data, not exceptions: each validator walks the defining conditions in
// order, records one report per clause, and stops the search for witnesses at
// the first failing clause (with lexicographically least witnesses) so test
// assertions are deterministic.
//
// Finite carriers make every genuinely topological condition (compactness,
// openness, T-separation that only constrains infinite families) hold for
// free; such clauses are still listed, marked Vacuous, so a report always
// shows the whole definition and what the finite case actually tests.

#include <string>
#include <vector>

#include "latdual/spaces.hpp"

namespace latdual {

enum class ClauseStatus { Checked, Vacuous, Skipped, Failed };

struct ClauseReport {
  std::string clause;                  // what the condition says
  ClauseStatus status = ClauseStatus::Checked;
  std::vector<std::string> witnesses;  // labels of a least counterexample
  std::string note;                    // finite reading, skip reason, ...
};

struct ValidationReport {
  bool ok = true;
  std::vector<ClauseReport> clauses;  // in definition order
  int first_failure = -1;             // index into clauses, -1 when ok

  // "ok" or "FAIL <clause> [witnesses...]", single line.
  std::string summary() const;
};

struct ValidateOptions {
  // Upper bound on the stable-family size for the CG Y-family condition; the
  // clause enumerates subfamilies (2^|family|) and is skipped with a note
  // above the bound.
  int cg_family_bound = 12;
  // Upper bound on the carrier size for conditions that quantify over all
  // upsets/downsets of a side (2^n enumeration); skipped with a note above.
  int upset_enum_bound = 16;
};

ValidationReport validate_space(const FiniteBoundedLattice& l,
                                const ValidateOptions& opts = {});
ValidationReport validate_space(const CGSpace& c, const ValidateOptions& opts = {});
ValidationReport validate_space(const DHSpace& d, const ValidateOptions& opts = {});
ValidationReport validate_space(const GvGSpace& g, const ValidateOptions& opts = {});
ValidationReport validate_space(const HgSpace& h, const ValidateOptions& opts = {});
ValidationReport validate_space(const UrqSpace& u, const ValidateOptions& opts = {});
ValidationReport validate_space(const PloSpace& p, const ValidateOptions& opts = {});
ValidationReport validate_space(const AnySpace& s, const ValidateOptions& opts = {});

// Checks m's per-category morphism conditions against the given end spaces
// (the overload without spaces uses the ones embedded in m).  The end spaces
// are assumed valid; run validate_space first for a full picture.
ValidationReport validate_morphism(const DualMorphism& m, const AnySpace& source,
                                   const AnySpace& target,
                                   const ValidateOptions& opts = {});
ValidationReport validate_morphism(const DualMorphism& m,
                                   const ValidateOptions& opts = {});

}  // namespace latdual

#pragma once

// Derived tame / wild decision for quadratic string algebras.  Trees go by the
// Euler form, everything else by the gqs test; tame algebras with cycles carry
// a reduction certificate.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsa/classify.hpp"
#include "qsa/covering.hpp"
#include "qsa/euler.hpp"
#include "qsa/transform.hpp"

namespace qsa {

enum class VerdictTag { Tame, Wild, NotQuadraticString };
// CoverWitness: monomial input outside the quadratic string class, shown wild
// by a local pattern or a wild full subcategory of its cover.
enum class Branch { None, TreeEuler, GqsCycles, CoverWitness };

std::string to_string(VerdictTag t);
std::string to_string(Branch b);

struct Verdict {
  VerdictTag tag = VerdictTag::NotQuadraticString;
  Branch branch = Branch::None;

  std::optional<QsReport> qs_report;                 // when not quadratic string
  std::optional<EulerData> euler;                    // tree branch
  std::optional<NonnegativityReport> form;           // tree branch
  std::optional<ReductionCertificate> certificate;   // tame with cycles
  std::optional<std::string> violating_vertex;       // neither gentle nor exceptional
  std::optional<LocalPatternReport> pattern;
  std::optional<WildWitness> witness;
  bool witness_budget_exhausted = false;

  // One line, e.g. "TAME (gqs; 3 exceptional vertices reduced)".
  std::string summary() const;
};

struct DecideOptions {
  size_t witness_radius = 8;
  size_t witness_size = 10;
  size_t node_budget = 3'000'000;
};

// Reads QSA_WITNESS_RADIUS and QSA_WITNESS_SIZE over the defaults; a value that
// is not a positive integer throws DomainError.
DecideOptions decide_options_from_env();

// Requires a connected admissible presentation.
Verdict decide_derived_type(const AlgebraPresentation& a, const DecideOptions& opts = {});

// Command-line front end; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsa

#include "qsa/decide.hpp"

#include <cstdlib>

#include "qsa/error.hpp"

namespace qsa {

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::Tame:
      return "Tame";
    case VerdictTag::Wild:
      return "Wild";
    default:
      return "NotQuadraticString";
  }
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::TreeEuler:
      return "TreeEuler";
    case Branch::GqsCycles:
      return "GqsCycles";
    case Branch::CoverWitness:
      return "CoverWitness";
    default:
      return "None";
  }
}

namespace {

std::string vec_string(const Vec& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

size_t env_size(const char* var, size_t fallback) {
  const char* s = std::getenv(var);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v <= 0) throw DomainError(std::string(var) + " must be a positive integer, got '" + s + "'");
  return static_cast<size_t>(v);
}

}  // namespace

std::string Verdict::summary() const {
  switch (tag) {
    case VerdictTag::Tame:
      if (branch == Branch::TreeEuler) return "TAME (tree; Euler form non-negative)";
      {
        size_t n = certificate ? certificate->steps.size() : 0;
        return "TAME (gqs; " + std::to_string(n) + " exceptional vert" + (n == 1 ? "ex" : "ices") + " reduced)";
      }
    case VerdictTag::Wild:
      if (branch == Branch::TreeEuler)
        return "WILD (tree; Euler form is " + to_string(form->witness_value) + " at " + vec_string(*form->witness) +
               ")";
      if (branch == Branch::GqsCycles) return "WILD (not gqs: vertex " + *violating_vertex + ")";
      return std::string("WILD (not quadratic string; ") + (pattern ? "local wild configuration" : "wild cover subcategory") +
             ")";
    default:
      break;
  }
  std::string why;
  if (qs_report && !qs_report->violations.empty())
    why = qs_report->violations.front().where + ": " + qs_report->violations.front().detail;
  return "NOT QUADRATIC STRING" + (why.empty() ? std::string() : " (" + why + ")");
}

DecideOptions decide_options_from_env() {
  DecideOptions o;
  o.witness_radius = env_size("QSA_WITNESS_RADIUS", o.witness_radius);
  o.witness_size = env_size("QSA_WITNESS_SIZE", o.witness_size);
  return o;
}

Verdict decide_derived_type(const AlgebraPresentation& a, const DecideOptions& opts) {
  ValidationReport vr = validate(a);
  if (!vr.connected) throw DomainError("presentation is not connected");
  if (!vr.admissible) throw DomainError("presentation is not admissible: " + vr.admissibility_note);

  Verdict v;
  QsReport qs = is_quadratic_string(a);
  if (!qs.ok) {
    v.qs_report = qs;
    if (!a.is_monomial()) return v;
    v.pattern = detect_local_wild_pattern(a);
    WitnessOptions wo;
    wo.node_budget = opts.node_budget;
    WitnessSearch ws = find_wild_witness(a, opts.witness_radius, opts.witness_size, wo);
    v.witness = ws.witness;
    v.witness_budget_exhausted = ws.budget_exhausted;
    if (v.pattern || v.witness) {
      v.tag = VerdictTag::Wild;
      v.branch = Branch::CoverWitness;
    }
    return v;
  }

  if (is_tree(a)) {
    v.branch = Branch::TreeEuler;
    v.euler = euler_matrix(cartan_matrix(a));
    v.form = is_nonnegative_form(*v.euler);
    v.tag = v.form->nonnegative ? VerdictTag::Tame : VerdictTag::Wild;
    return v;
  }

  v.branch = Branch::GqsCycles;
  VertexClassification vc = classify_vertices(a);
  if (vc.is_gqs) {
    v.tag = VerdictTag::Tame;
    v.certificate = reduce_to_skewed_gentle(a);
    return v;
  }
  v.tag = VerdictTag::Wild;
  for (const auto& c : vc.vertices)
    if (c.kind == VertexKind::NonGentleNonExceptional) {
      v.violating_vertex = c.vertex;
      break;
    }
  v.pattern = detect_local_wild_pattern(a);
  WitnessOptions wo;
  wo.node_budget = opts.node_budget;
  WitnessSearch ws = find_wild_witness(a, opts.witness_radius, opts.witness_size, wo);
  v.witness = ws.witness;
  v.witness_budget_exhausted = ws.budget_exhausted;
  return v;
}

}  // namespace qsa

#pragma once

// Blow-ups, sink/source mutations and the case-by-case reduction of a gqs
// algebra (with a set of special vertices) to a gentle one.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsa/classify.hpp"
#include "qsa/presentation.hpp"

namespace qsa {

// ---- blow-up -------------------------------------------------------------

// Each d in D becomes d+ and d-.  An arrow touching one blown vertex becomes
// a+ / a-, one touching two becomes a++, a+-, a-+, a-- (source sign first).
// Generators of I[D]:
//   * every lift of a monomial relation;
//   * one lift of each other relation per choice of endpoint lifts, inner blown
//     vertices taken with sign +;
//   * b(->d+) c(d+->) - b(->d-) c(d-->) for each length-two path b c through d in D
//     and each choice of outer lifts, unless b c is a monomial relation.
// Throws DomainError for a looped or unknown vertex, or a name collision.
AlgebraPresentation blow_up(const AlgebraPresentation& a, const VertexSet& D);

// ---- mutation ------------------------------------------------------------

// A bounded complex of projectives P_i = e_i A, maps given by left
// multiplication.  terms[k] lives in degree lowest + k and lists the vertices
// of its summands; labels (optional) name each summand after the arrow that
// put it there.  diff[k][q][p] is the component from summand p of terms[k] to
// summand q of terms[k+1], an element of the algebra's space (v_q, u_p).
struct ProjectiveComplex {
  int lowest = 0;
  std::vector<std::vector<std::string>> terms;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::vector<std::pair<Rational, Path>>>>> diff;
};

ProjectiveComplex stalk_complex(const std::string& v);
// P_x -> (+) P_{s(a)} over arrows a ending at x, in degrees -1, 0.
ProjectiveComplex sink_complex(const AlgebraPresentation& a, const std::string& x);
// (+) P_{t(a)} over arrows a starting at x -> P_x, in degrees 0, 1.
ProjectiveComplex source_complex(const AlgebraPresentation& a, const std::string& x);

// Presentation of End(T)^op for T = (+) of the given complexes, one vertex per
// summand (keyed by vertex id).  Each summand must be a minimal complex with
// local endomorphism ring and the summands pairwise non-isomorphic; this is
// checked only as far as the radical computation needs.  Arrows between two
// stalk summands keep the id of the arrow they come from, others get a "*".
// Relations are searched among combinations of paths of length 2 and 3 and the
// result is verified by comparing dimensions; a shortfall throws DomainError
// ("relation search exceeds length bound").
AlgebraPresentation endomorphism_presentation(const AlgebraPresentation& a,
                                              const std::map<std::string, ProjectiveComplex>& summands,
                                              const std::string& name);

enum class MutationSign { Minus, Plus };

// Minus at a sink, plus at a source.  Works for any admissible presentation
// whose monomial relations bound path length.
AlgebraPresentation mutate_at(const AlgebraPresentation& a, const std::string& x, MutationSign sign);

// ---- reduction -----------------------------------------------------------

enum class StepKind { SinkMutation, SourceMutation, CaseRewrite, DirectBlowupRecognition };

std::string to_string(StepKind k);

struct ReductionStep {
  StepKind kind = StepKind::CaseRewrite;
  int case_number = 0;           // 1..6
  std::string vertex;            // the exceptional vertex removed
  std::map<std::string, std::string> local;  // roles a, b, x, c, e and alpha..delta -> ids
  std::string dropped;           // vertex deleted from the quiver
  std::string special;           // vertex added to S
  std::vector<std::string> script;           // human-readable moves
  std::string before_name, after_name;
  AlgebraPresentation before, after;
  // Intermediate algebras of the mutation scripts (cases 1, 2, 4 and their duals).
  std::optional<AlgebraPresentation> omega, gamma;
  VertexSet D_before, S_after;
  size_t exceptional_before = 0, exceptional_after = 0;
};

struct ReductionOutcome {
  AlgebraPresentation B;
  VertexSet S;
  ReductionStep step;
};

// One reduction at `vertex` (default: the smallest exceptional vertex).
// Requires a gqs presentation, D special and not ordinary, D avoiding the
// vertices the case rewrites.
ReductionOutcome reduce_step(const AlgebraPresentation& a, const VertexSet& D,
                             const std::optional<std::string>& vertex = std::nullopt);

struct ReductionCertificate {
  AlgebraPresentation input;
  std::vector<ReductionStep> steps;
  AlgebraPresentation B;
  VertexSet S;
};

ReductionCertificate reduce_to_skewed_gentle(const AlgebraPresentation& a);

// JSON document with the input and each step's before/after presentation texts.
std::string certificate_to_json(const ReductionCertificate& c, int indent = 2);

// Re-runs every recorded step from the recorded input and checks each
// intermediate result against the recording; throws DomainError on mismatch.
ReductionCertificate replay_certificate(const std::string& json);

}  // namespace qsa

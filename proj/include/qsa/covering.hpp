#pragma once

// Radius-r balls of the universal cover of a monomial bound quiver, the search
// for radical-square-zero wild subcategories inside them, and two local
// configurations that force wildness.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsa/graph_type.hpp"
#include "qsa/presentation.hpp"

namespace qsa {

// Vertices are reduced walks from the basepoint.  The walk e is named after the
// basepoint; a walk extended by an arrow a is named "<parent>.a", by an inverse
// step "<parent>.a'".  Cover arrows are named "a@<source vertex>".
struct CoverBall {
  std::string basepoint;
  size_t radius = 0;
  AlgebraPresentation cover;
  std::map<std::string, std::string> vertex_projection;
  std::map<std::string, std::string> arrow_projection;
  std::map<std::string, Walk> walks;     // cover vertex -> reduced walk in the base
  std::map<std::string, size_t> depth;   // walk length
};

// Requires a monomial presentation.  Relations of the ball are the lifts of base
// relations that stay inside it.
CoverBall truncated_cover(const AlgebraPresentation& a, const std::string& base, size_t radius);

struct WildWitness {
  std::string basepoint;
  size_t radius = 0;
  std::vector<std::string> cover_vertices;
  AlgebraPresentation induced;  // radical-square-zero on the induced quiver
  GraphType type;
  std::string note;
};

struct WitnessOptions {
  size_t node_budget = 3'000'000;  // subsets visited before giving up
  // When set, only witnesses whose induced presentation is isomorphic to this one qualify.
  std::optional<AlgebraPresentation> target;
};

struct WitnessSearch {
  std::optional<WildWitness> witness;
  bool budget_exhausted = false;
  size_t visited = 0;
};

// Connected vertex sets of the ball (one basepoint per base vertex) whose full
// subcategory is K Delta / R^2 with Delta neither Dynkin nor Euclidean.
// Sets are tried by increasing size, basepoints in canonical order; the first
// hit is returned.  Absence is only absence within the bounds.
WitnessSearch find_wild_witness(const AlgebraPresentation& a, size_t radius, size_t max_size,
                                const WitnessOptions& opts = {});

// The full subcategory of a monomial presentation on the given vertices, when it
// is radical-square-zero: one arrow per nonzero path that does not factor
// through the set.  nullopt if two such arrows compose to a nonzero path.
std::optional<AlgebraPresentation> radical_square_zero_restriction(const AlgebraPresentation& a,
                                                                   const std::vector<std::string>& vertices);

struct LocalPatternReport {
  int pattern = 0;        // 1: two-cycle with an extra arrow, 2: fork with a five-edge tail
  bool mirrored = false;  // found in the dual orientation
  std::map<std::string, std::string> arrows;    // role -> arrow id
  std::vector<std::string> vertices;            // matched vertices
  std::string description;
};

// Requires a monomial presentation.
std::optional<LocalPatternReport> detect_local_wild_pattern(const AlgebraPresentation& a);

}  // namespace qsa

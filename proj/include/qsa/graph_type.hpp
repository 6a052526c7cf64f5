#pragma once

// Dynkin / Euclidean recognition for finite connected multigraphs.

#include <string>

#include "qsa/presentation.hpp"

namespace qsa {

enum class GraphFamily { Dynkin, Euclidean, Other };

struct GraphType {
  GraphFamily family = GraphFamily::Other;
  char letter = 0;  // 'A', 'D' or 'E' when not Other
  size_t n = 0;     // index: A_n has n vertices, the extended ~A_n has n + 1

  std::string to_string() const;  // "A5", "~D4", "Other"
  bool operator==(const GraphType&) const = default;
};

// Shape-based recognition (paths, cycles, stars with three arms, double forks).
// Throws DomainError on disconnected or empty input.
GraphType structural_graph_type(const MultiGraph& g);

enum class TitsSign { PositiveDefinite, PositiveSemidefinite, Indefinite };

// Sign of q(x) = sum x_i^2 - sum_{edges} x_s x_t, loops contributing -x_v^2.
TitsSign tits_form_sign(const MultiGraph& g);

// Structural recognition, checked against the Tits form; a disagreement is a
// logic error and throws.
GraphType graph_type(const MultiGraph& g);

}  // namespace qsa

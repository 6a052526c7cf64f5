#pragma once

// Vertex taxonomy of quadratic string algebras: gentle vertices, the
// exceptional classes E1..E6 with their ordinary sets O1..O6, special vertices.
//
// Relations are written left to right, so (a, b) in I means "a then b".  The
// gentle-vertex test counts, for each arrow at x, the partners that compose with
// it through x into a relation.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "qsa/ident.hpp"
#include "qsa/presentation.hpp"

namespace qsa {

using VertexSet = std::set<std::string, IdentLess>;

struct QsViolation {
  int condition = 0;  // 1: degree bound, 2: unique continuation, 3: relation shape
  std::string where;  // vertex or arrow id
  std::string detail;
};

struct QsReport {
  bool ok = true;
  std::vector<QsViolation> violations;
};

QsReport is_quadratic_string(const AlgebraPresentation& a);

enum class VertexKind { Gentle, Exceptional, NonGentleNonExceptional };

// Arrows realising an exceptional clause.  beta is empty for clauses 5 and 6,
// delta is empty for clauses 3 and 4.
struct ExceptionalWitness {
  int clause = 0;
  std::string alpha, beta, gamma, delta;
};

struct VertexClass {
  std::string vertex;
  VertexKind kind = VertexKind::Gentle;
  ExceptionalWitness witness;     // meaningful when kind == Exceptional
  std::vector<int> also;          // further clauses satisfied besides witness.clause
  std::set<int> ordinary_in;      // i such that vertex is in O_i
};

struct VertexClassification {
  std::vector<VertexClass> vertices;  // canonical vertex order
  std::array<VertexSet, 6> E, O;
  bool is_quadratic_string = false;
  bool is_gentle_algebra = false;
  bool is_gqs = false;
  std::vector<std::string> diagnostics;

  const VertexClass& at(const std::string& v) const;
  size_t exceptional_count() const;
  VertexSet exceptional() const;
  VertexSet ordinary() const;
};

// Works on any presentation whose relations are length-two paths; the
// quadratic-string flag records whether the full hypotheses hold.  Throws
// DomainError for other relation shapes.
VertexClassification classify_vertices(const AlgebraPresentation& a);

bool is_gentle_vertex(const AlgebraPresentation& a, const std::string& x);
bool is_gqs(const AlgebraPresentation& a);
bool is_gentle_algebra(const AlgebraPresentation& a);

struct SpecialReport {
  VertexSet special;
  VertexSet special_ordinary;  // special vertices that are also ordinary
  VertexSet special_not_ordinary() const;
};

SpecialReport special_vertices(const AlgebraPresentation& a);

}  // namespace qsa

#pragma once

// Bounded quivers: quivers with a finite list of relation terms.
// Paths compose left to right, so "a b" means a first, then b.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsa/linalg.hpp"

namespace qsa {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  // Sorts vertices and arrows canonically; throws DomainError on duplicate ids,
  // invalid tokens or arrows with unknown endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  size_t vertex_count() const { return vertices_.size(); }
  size_t arrow_count() const { return arrows_.size(); }

  std::optional<size_t> vertex_index(std::string_view v) const;
  std::optional<size_t> arrow_index(std::string_view a) const;
  bool has_vertex(std::string_view v) const { return vertex_index(v).has_value(); }
  bool has_arrow(std::string_view a) const { return arrow_index(a).has_value(); }

  const Arrow& arrow(size_t i) const { return arrows_[i]; }
  const Arrow& arrow(std::string_view id) const;
  size_t source(size_t arrow) const { return src_[arrow]; }
  size_t target(size_t arrow) const { return tgt_[arrow]; }
  const std::vector<size_t>& out_arrows(size_t v) const { return out_[v]; }
  const std::vector<size_t>& in_arrows(size_t v) const { return in_[v]; }

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<size_t> src_, tgt_;
  std::vector<std::vector<size_t>> out_, in_;
};

struct Path {
  std::string source;
  std::string target;
  std::vector<std::string> arrows;

  static Path trivial(const std::string& v) { return Path{v, v, {}}; }
  size_t length() const { return arrows.size(); }
  std::string to_string() const;  // "e_x" for trivial paths

  bool operator==(const Path&) const = default;
};

// Canonical order: length, then arrow ids, then endpoints.
bool path_less(const Path& a, const Path& b);

// Builds the path through `arrows` in q, throwing if consecutive arrows do not compose.
Path make_path(const Quiver& q, const std::vector<std::string>& arrows);
bool contains_subpath(const std::vector<std::string>& path, const std::vector<std::string>& sub);

// Signed arrow step of a walk; exponent is +1 or -1.
struct WalkStep {
  std::string arrow;
  int exponent = 1;
  bool operator==(const WalkStep&) const = default;
};

struct Walk {
  std::string source;
  std::string target;
  std::vector<WalkStep> steps;

  size_t length() const { return steps.size(); }
  bool is_reduced() const;
  bool is_closed() const { return source == target; }
  bool operator==(const Walk&) const = default;
};

struct RelationTerm {
  std::vector<std::pair<Rational, Path>> terms;

  bool is_monomial() const { return terms.size() == 1; }
  const Path& front() const { return terms.front().second; }
  const std::string& source() const { return terms.front().second.source; }
  const std::string& target() const { return terms.front().second.target; }
  size_t max_length() const;

  static RelationTerm monomial(Path p) { return RelationTerm{{{Rational(1), std::move(p)}}}; }
  bool operator==(const RelationTerm&) const = default;
};

class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  // Validates every relation against the quiver and puts relations into canonical
  // form: terms sorted, leading coefficient 1, relations sorted and deduplicated.
  AlgebraPresentation(std::string name, Quiver quiver, std::vector<RelationTerm> relations);

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<RelationTerm>& relations() const { return relations_; }

  bool is_monomial() const;
  bool is_monomial_quadratic() const;
  AlgebraPresentation renamed(std::string name) const;

  bool operator==(const AlgebraPresentation& o) const = default;

 private:
  std::string name_;
  Quiver quiver_;
  std::vector<RelationTerm> relations_;
};

AlgebraPresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const AlgebraPresentation& a);

struct ValidationReport {
  bool connected = true;
  size_t components = 0;
  bool monomial = true;
  bool monomial_quadratic = true;
  bool acyclic = true;
  bool admissible = false;
  // Every path of length >= bound is zero in the algebra (certified part of admissibility).
  std::optional<size_t> bound;
  std::string admissibility_note;
  std::vector<std::string> loop_free;
  std::vector<std::string> looped;
};

ValidationReport validate(const AlgebraPresentation& a);

struct MultiGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<size_t, size_t>> edges;  // loops allowed, multi-edges allowed

  size_t vertex_count() const { return labels.size(); }
  bool connected() const;
};

MultiGraph underlying_graph(const AlgebraPresentation& a);
bool is_tree(const AlgebraPresentation& a);
bool is_connected(const AlgebraPresentation& a);
bool has_oriented_cycle(const Quiver& q);

// Length of the longest path containing no monomial relation as a subpath, or
// nullopt when such paths are unbounded. Binomial relations are ignored here.
std::optional<size_t> longest_monomially_free_path(const AlgebraPresentation& a);

// Relation-free paths from i to j of a monomial admissible presentation.
std::vector<Path> path_basis(const AlgebraPresentation& a, const std::string& i, const std::string& j);

// True if the monomial path lies in the ideal generated by the monomial relations of a.
bool path_hits_monomial_relation(const AlgebraPresentation& a, const std::vector<std::string>& path);

AlgebraPresentation opposite(const AlgebraPresentation& a);

// Full subquiver on `keep`; relations are those whose terms all stay inside it.
AlgebraPresentation full_subpresentation(const AlgebraPresentation& a, const std::set<std::string>& keep,
                                         std::string name);

// Renames vertices and arrows; ids missing from the maps are kept.
AlgebraPresentation relabel(const AlgebraPresentation& a, const std::map<std::string, std::string>& vertex_map,
                            const std::map<std::string, std::string>& arrow_map);

struct Isomorphism {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> arrows;
};

struct IsomorphismOptions {
  size_t max_vertices = 14;  // per presentation
};

// A vertex and arrow bijection carrying a onto b whose induced map sends the
// relation ideal of a onto that of b, compared up to rescaling of arrows
// (equal reduced-echelon support patterns of the truncated ideals).
std::optional<Isomorphism> presentations_isomorphic(const AlgebraPresentation& a, const AlgebraPresentation& b,
                                                    const IsomorphismOptions& opts = {});

}  // namespace qsa

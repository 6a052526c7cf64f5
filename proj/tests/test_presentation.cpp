#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsa/error.hpp"
#include "support.hpp"

using namespace qsa;
using qsa::test::fixture;
using qsa::test::parse;

TEST_CASE("every fixture parses and survives a serialize round trip") {
  for (const auto& name : test::fixture_names()) {
    CAPTURE(name);
    AlgebraPresentation a = fixture(name);
    CHECK(parse(serialize_presentation(a)) == a);
  }
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_AS(parse("vertices: 1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse("quiver x\nvertices: 1 2\narrow a: 1 -> 3\n"), doctest::Contains("3"), DomainError);
  CHECK_THROWS_AS(parse("quiver x\nvertices: 1 1\n"), DomainError);
  CHECK_THROWS_AS(parse("quiver x\nvertices: 1 2\narrow a: 1 -> 2\nrelations:\n(a) + (\n"), ParseError);
  try {
    parse("quiver x\nvertices: 1 2\narrow a: 1 -> 2\nrelations:\n(a) (a)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("relations are canonicalised") {
  AlgebraPresentation a = parse(
      "quiver sq\nvertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\n"
      "relations:\n- 2 (c d) + 2 (a b)\n");
  REQUIRE(a.relations().size() == 1);
  const auto& r = a.relations()[0];
  CHECK(r.terms[0].first == 1);
  CHECK(r.terms[0].second.arrows == std::vector<std::string>{"a", "b"});
  CHECK(r.terms[1].first == -1);
  CHECK_FALSE(a.is_monomial());
}

TEST_CASE("validation") {
  ValidationReport a5 = validate(fixture("a5"));
  CHECK(a5.connected);
  CHECK(a5.acyclic);
  CHECK(a5.admissible);
  CHECK(a5.monomial_quadratic);

  ValidationReport loop = validate(fixture("loop"));
  CHECK(loop.admissible);
  REQUIRE(loop.bound);
  CHECK(*loop.bound == 2);
  CHECK(loop.looped == std::vector<std::string>{"1"});

  // a loop with no relation generates arbitrarily long paths
  ValidationReport free_loop = validate(parse("quiver f\nvertices: 1\narrow x: 1 -> 1\n"));
  CHECK_FALSE(free_loop.admissible);

  ValidationReport two = validate(parse("quiver d\nvertices: 1 2\n"));
  CHECK_FALSE(two.connected);
  CHECK(two.components == 2);
}

TEST_CASE("trees and cycles") {
  CHECK(is_tree(fixture("a5")));
  CHECK(is_tree(fixture("ten-vertex")));
  CHECK_FALSE(is_tree(fixture("kronecker")));  // the double edge is a cycle
  CHECK_FALSE(is_tree(fixture("loop")));
  CHECK_FALSE(is_tree(fixture("three-vertex")));
}

TEST_CASE("path basis respects the monomial relations") {
  AlgebraPresentation a5 = fixture("a5");
  CHECK(path_basis(a5, "1", "3").empty());
  CHECK(path_basis(a5, "2", "5").size() == 1);
  CHECK(path_basis(a5, "1", "2").size() == 1);
  CHECK(path_basis(a5, "3", "3").size() == 1);
  // dimension of A5 / <alpha beta>: 5 trivial paths, 4 arrows, paths of length 2..4 avoiding alpha beta
  CHECK(PathAlgebra(a5).total_dim() == 5 + 4 + 2 + 1);
}

TEST_CASE("path algebra with a commutativity relation") {
  AlgebraPresentation sq = parse(
      "quiver sq\nvertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\n"
      "relations:\n(a b) - (c d)\n");
  PathAlgebra p(sq);
  CHECK(p.dim(0, 3) == 1);
  CHECK(p.total_dim() == 4 + 4 + 1);
  Vec ab = p.path_element(make_path(sq.quiver(), {"a", "b"}));
  Vec cd = p.path_element(make_path(sq.quiver(), {"c", "d"}));
  CHECK(ab == cd);
}

TEST_CASE("opposite is an involution and reverses arrows") {
  for (const auto& name : {"a5", "twelve-vertex", "three-vertex", "case1-gamma"}) {
    CAPTURE(name);
    AlgebraPresentation a = fixture(name);
    AlgebraPresentation o = opposite(a);
    CHECK(o.quiver().arrow_count() == a.quiver().arrow_count());
    for (const auto& ar : a.quiver().arrows()) {
      const Arrow& r = o.quiver().arrow(ar.id);
      CHECK(r.source == ar.target);
      CHECK(r.target == ar.source);
    }
    CHECK(presentations_isomorphic(opposite(o), a));
  }
}

TEST_CASE("isomorphism search") {
  AlgebraPresentation b = fixture("twelve-vertex");
  std::map<std::string, std::string> vm, am;
  int k = 0;
  for (const auto& v : b.quiver().vertices()) vm[v] = "w" + std::to_string(100 - ++k);
  for (const auto& ar : b.quiver().arrows()) am[ar.id] = ar.id + "_r";
  AlgebraPresentation r = relabel(b, vm, am);
  auto iso = presentations_isomorphic(b, r);
  REQUIRE(iso);
  CHECK(iso->vertices.at("3") == vm.at("3"));

  // same quiver, different relation
  AlgebraPresentation a5 = fixture("a5");
  AlgebraPresentation other = parse(serialize_presentation(a5).substr(0, serialize_presentation(a5).find("relations:")) +
                                    "relations:\ngamma delta\n");
  CHECK_FALSE(presentations_isomorphic(a5, other));
  // but reversing the line carries gamma delta onto alpha beta
  CHECK(presentations_isomorphic(opposite(a5), other));

  // rescaling an arrow does not change the ideal
  AlgebraPresentation s1 = parse(
      "quiver s\nvertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\n"
      "relations:\n(a b) - (c d)\n");
  AlgebraPresentation s2 = parse(
      "quiver s\nvertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\n"
      "relations:\n(a b) + 3 (c d)\n");
  CHECK(presentations_isomorphic(s1, s2));
  CHECK_FALSE(presentations_isomorphic(s1, fixture("case4-omega")));
}

TEST_CASE("full subpresentation keeps the relations inside") {
  AlgebraPresentation b = fixture("twelve-vertex");
  AlgebraPresentation s = full_subpresentation(b, {"9", "10", "11", "12"}, "part");
  CHECK(s.quiver().vertex_count() == 4);
  CHECK(s.quiver().arrow_count() == 4);
  CHECK(s.relations().size() == 4);
}

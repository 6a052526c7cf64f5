#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsa/error.hpp"
#include "support.hpp"

using namespace qsa;
using qsa::test::fixture;
using qsa::test::parse;

namespace {

Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("cartan matrices") {
  CartanMatrix one = cartan_matrix(parse("quiver p\nvertices: 1\n"));
  CHECK(one.entries == std::vector<Vec>{ints({1})});

  CartanMatrix a2 = cartan_matrix(fixture("a2"));
  // entries[i][j] counts paths j -> i
  CHECK(a2.entries == std::vector<Vec>{ints({1, 0}), ints({1, 1})});

  CartanMatrix a5 = cartan_matrix(fixture("a5"));
  CHECK(a5.entries[2][0] == 0);  // the only path 1 -> 3 is alpha beta
  CHECK(a5.entries[1][0] == 1);
  CHECK(a5.entries[4][1] == 1);

  CHECK_THROWS_AS(cartan_matrix(fixture("gentle-cycle")), DomainError);
  CHECK(cartan_matrix(fixture("kronecker")).entries[1][0] == 2);
}

TEST_CASE("euler forms match the hereditary Tits form") {
  EulerData a2 = euler_matrix(cartan_matrix(fixture("a2")));
  CHECK(form_polynomial(a2) == "x1^2 + x2^2 - x1*x2");
  CHECK(euler_eval(a2, ints({1, 1})) == 1);
  CHECK(euler_eval(a2, ints({1, 0})) == 1);
  CHECK(euler_eval(a2, ints({0, 0})) == 0);
  CHECK_THROWS_AS(euler_eval(a2, ints({1})), DomainError);

  // hereditary trees: chi(x) = sum x_i^2 - sum over arrows x_s x_t
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    AlgebraPresentation t = test::random_quadratic_monomial(rng, 6, 0, 0.0, "t");
    EulerData e = euler_matrix(cartan_matrix(t));
    Vec x;
    for (size_t i = 0; i < 6; ++i) x.push_back(Rational(static_cast<long>(rng() % 7) - 3));
    Rational tits = 0;
    for (const auto& xi : x) tits += xi * xi;
    for (const auto& ar : t.quiver().arrows())
      tits -= x[*t.quiver().vertex_index(ar.source)] * x[*t.quiver().vertex_index(ar.target)];
    CHECK(euler_eval(e, x) == tits);
  }
}

TEST_CASE("semisimple") {
  CartanMatrix id{{"1", "2", "3"}, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}};
  EulerData e = euler_matrix(id);
  CHECK(euler_eval(e, ints({1, 2, 3})) == 14);
  CHECK(is_nonnegative_form(e).nonnegative);
}

TEST_CASE("non-unimodular cartan matrix is rejected") {
  CartanMatrix bad{{"1", "2"}, {ints({1, 0}), ints({2, 2})}};
  CHECK_THROWS_AS(euler_matrix(bad), DomainError);
}

TEST_CASE("A5 with one relation agrees with the resolution oracle") {
  AlgebraPresentation a5 = fixture("a5");
  EulerData e = euler_matrix(cartan_matrix(a5));
  auto chi = test::ext_euler_oracle(a5);
  // S_1 has the resolution 0 -> P3 -> P2 -> P1 -> S1
  CHECK(chi[0] == std::vector<long>{1, -1, 1, 0, 0});
  for (size_t i = 0; i < 5; ++i) {
    Vec x(5, Rational(0));
    x[i] = 1;
    CHECK(euler_eval(e, x) == chi[i][i]);
  }
  CHECK(test::integral(e.E).size() == 5);
}

TEST_CASE("non-negativity test") {
  std::vector<Vec> hyperbolic{{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(0)}};
  NonnegativityReport r = is_nonnegative_form(hyperbolic);
  CHECK_FALSE(r.nonnegative);
  REQUIRE(r.witness);
  Rational v = 0;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) v += (*r.witness)[i] * hyperbolic[i][j] * (*r.witness)[j];
  CHECK(v < 0);
  CHECK(v == r.witness_value);
  // zero diagonal at 0: x0 = -(m11 + 1) / (2 m01) = -1, x1 = 1
  CHECK(*r.witness == ints({-1, 1}));
  CHECK(r.witness_value == -1);

  CHECK(is_nonnegative_form(std::vector<Vec>{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}).nonnegative);
  CHECK(is_nonnegative_form(euler_matrix(cartan_matrix(fixture("a2")))).nonnegative);

  NonnegativityReport ten = is_nonnegative_form(euler_matrix(cartan_matrix(fixture("ten-vertex"))));
  CHECK_FALSE(ten.nonnegative);
  REQUIRE(ten.witness);
  CHECK(ten.witness_value < 0);
  CHECK(euler_eval(euler_matrix(cartan_matrix(fixture("ten-vertex"))), *ten.witness) == ten.witness_value);
}

TEST_CASE("hereditary consistency with graph types") {
  std::mt19937 rng(11);
  for (int k = 0; k < 60; ++k) {
    size_t n = 2 + rng() % 8;
    AlgebraPresentation t = test::random_quadratic_monomial(rng, n, 0, 0.0, "t");
    bool nonneg = is_nonnegative_form(euler_matrix(cartan_matrix(t))).nonnegative;
    GraphType g = graph_type(underlying_graph(t));
    CAPTURE(serialize_presentation(t));
    CHECK(nonneg == (g.family != GraphFamily::Other));
  }
}

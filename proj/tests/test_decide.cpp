#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>

#include "qsa/error.hpp"
#include "support.hpp"

using namespace qsa;
using nlohmann::json;
using qsa::test::cli;
using qsa::test::fixture;
using qsa::test::fixture_path;

TEST_CASE("verdicts on the fixtures") {
  Verdict b = decide_derived_type(fixture("twelve-vertex"));
  CHECK(b.tag == VerdictTag::Tame);
  CHECK(b.branch == Branch::GqsCycles);
  REQUIRE(b.certificate);
  CHECK(b.certificate->steps.size() == 3);
  CHECK(b.summary() == "TAME (gqs; 3 exceptional vertices reduced)");

  Verdict k = decide_derived_type(fixture("kronecker"));
  CHECK(k.tag == VerdictTag::Tame);
  CHECK(k.branch == Branch::GqsCycles);
  REQUIRE(k.certificate);
  CHECK(k.certificate->steps.empty());

  Verdict a5 = decide_derived_type(fixture("a5"));
  CHECK(a5.tag == VerdictTag::Tame);
  CHECK(a5.branch == Branch::TreeEuler);
  CHECK(a5.euler);
  CHECK_FALSE(a5.certificate);

  Verdict l = decide_derived_type(fixture("ten-vertex"));
  CHECK(l.tag == VerdictTag::Wild);
  CHECK(l.branch == Branch::TreeEuler);
  REQUIRE(l.form);
  CHECK(l.form->witness);

  Verdict t = decide_derived_type(fixture("two-cycle-tail"));
  CHECK(t.tag == VerdictTag::Wild);
  CHECK(t.branch == Branch::GqsCycles);
  CHECK(t.violating_vertex == std::optional<std::string>("a"));
  CHECK(t.pattern);

  Verdict e = decide_derived_type(fixture("three-vertex"));
  CHECK(e.tag == VerdictTag::Wild);
  CHECK(e.branch == Branch::CoverWitness);
  CHECK(e.witness);
  CHECK(e.qs_report);

  Verdict star = decide_derived_type(fixture("star"));
  CHECK(star.tag == VerdictTag::Wild);
  CHECK(star.branch == Branch::CoverWitness);

  Verdict nq = decide_derived_type(fixture("case1-gamma"));
  CHECK(nq.tag == VerdictTag::NotQuadraticString);
  CHECK(nq.summary().rfind("NOT QUADRATIC STRING", 0) == 0);
}

TEST_CASE("decide rejects inadmissible input") {
  CHECK_THROWS_AS(decide_derived_type(test::parse("quiver f\nvertices: 1\narrow x: 1 -> 1\n")), DomainError);
  CHECK_THROWS_AS(decide_derived_type(test::parse("quiver d\nvertices: 1 2\n")), DomainError);
}

TEST_CASE("environment overrides") {
  setenv("QSA_WITNESS_RADIUS", "5", 1);
  setenv("QSA_WITNESS_SIZE", "7", 1);
  DecideOptions o = decide_options_from_env();
  CHECK(o.witness_radius == 5);
  CHECK(o.witness_size == 7);
  setenv("QSA_WITNESS_SIZE", "many", 1);
  CHECK_THROWS_AS(decide_options_from_env(), DomainError);
  unsetenv("QSA_WITNESS_RADIUS");
  unsetenv("QSA_WITNESS_SIZE");
  CHECK(decide_options_from_env().witness_radius == 8);
  CHECK(decide_options_from_env().witness_size == 10);
}

TEST_CASE("cli: decide") {
  auto r = cli({"decide", fixture_path("twelve-vertex")});
  CHECK(r.status == 0);
  CHECK(r.out == "TAME (gqs; 3 exceptional vertices reduced)\n");

  auto w = cli({"decide", "--json", fixture_path("three-vertex")});
  CHECK(w.status == 0);
  json j = json::parse(w.out);
  CHECK(j["tag"] == "Wild");
  REQUIRE(j["evidence"]["witness"].is_object());
  AlgebraPresentation induced = parse_presentation(j["evidence"]["witness"]["presentation"].get<std::string>());
  CHECK(graph_type(underlying_graph(induced)).family == GraphFamily::Other);

  auto small = cli({"decide", "--radius", "2", "--max-size", "4", fixture_path("two-cycle-tail")});
  CHECK(small.status == 0);
  CHECK(small.out.find("WILD (not gqs: vertex a)") == 0);
}

TEST_CASE("cli: usage and domain errors") {
  auto none = cli({"decide"});
  CHECK(none.status == 2);
  CHECK(none.err.find("usage: qsa") != std::string::npos);
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate", "x"}).status == 2);
  CHECK(cli({"mutate", fixture_path("a2"), "--vertex", "2", "--sign", "sideways"}).status == 2);
  CHECK(cli({"euler", fixture_path("a2"), "--eval", "1,2,3"}).status == 2);

  auto missing = cli({"check", "/nonexistent/file.qsa"});
  CHECK(missing.status == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  CHECK(cli({"mutate", fixture_path("a2"), "--vertex", "1", "--sign", "minus"}).status == 1);
  CHECK(cli({"euler", fixture_path("gentle-cycle")}).status == 1);
  CHECK(cli({"reduce", fixture_path("two-cycle-tail")}).status == 1);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("cli: every subcommand speaks JSON") {
  std::string tmp = (std::filesystem::temp_directory_path() / "qsa-test-cert.json").string();
  std::vector<std::vector<std::string>> runs{
      {"check", "--json", fixture_path("a5")},
      {"classify", "--json", fixture_path("twelve-vertex")},
      {"decide", "--json", fixture_path("a5")},
      {"blowup", "--json", fixture_path("a5"), "--vertices", "1,3"},
      {"mutate", "--json", fixture_path("case4-local"), "--vertex", "4", "--sign", "minus"},
      {"reduce", "--json", fixture_path("twelve-vertex"), "--certificate", tmp},
      {"euler", "--json", fixture_path("a2"), "--eval", "1,1"},
      {"cover", "--json", fixture_path("loop"), "--base", "1", "--radius", "2"},
      {"witness", "--json", fixture_path("a5"), "--radius", "3", "--max-size", "4"},
  };
  for (const auto& args : runs) {
    CAPTURE(args[0]);
    auto r = cli(args);
    CHECK(r.status == 0);
    json parsed;
    CHECK_NOTHROW(parsed = json::parse(r.out));
  }
  CHECK(std::filesystem::exists(tmp));
  std::filesystem::remove(tmp);

  json e = json::parse(cli({"euler", "--json", fixture_path("a2"), "--eval", "1,1"}).out);
  CHECK(e["eval"]["value"] == 1);
  CHECK(e["form"] == "x1^2 + x2^2 - x1*x2");
  json c = json::parse(cli({"classify", "--json", fixture_path("twelve-vertex")}).out);
  CHECK(c["E"]["1"] == json::array({"4"}));
  CHECK(c["flags"]["gqs"] == true);
}

TEST_CASE("cli: text output") {
  auto w = cli({"witness", fixture_path("a5"), "--radius", "3", "--max-size", "4"});
  CHECK(w.out == "none within bounds\n");
  auto b = cli({"blowup", fixture_path("a5"), "--vertices", "1,3"});
  CHECK(presentations_isomorphic(parse_presentation(b.out), fixture("a5-blowup13")));
  auto e = cli({"euler", fixture_path("ten-vertex")});
  CHECK(e.out.find("non-negative: no") != std::string::npos);
}

#include "../support.hpp"
#include "conelab/commands.hpp"
#include "conelab/errors.hpp"
#include "doctest.h"

using namespace conelab;

namespace {

const char* kSample = R"(ring QQ[x,y] order grevlex;
ideal I = x*y;
ideal L = x^2, y;
point p = (0, 1/2);
complex E = matrix [[0],[0]] -> omega over I via [[0]];
resolution R = tautological L;
resolution R2 = padded R 2;
resolution R3 = reordered R2 (1, 0);
ring GF(7)[t];
ideal T = t^3;
chow A = QQ[h] weights (1) relations (h^2) top 1;
degree A = h -> 1;
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("session declarations are looked up by kind") {
  const Session s = parse_session(kSample);
  CHECK(s.ideal("I").generators().size() == 1);
  CHECK(s.point("p").size() == 2);
  CHECK(s.resolution("R3").kind == ResolutionDecl::Kind::Reordered);
  CHECK(s.ideal("T").ring()->field().characteristic() == 7);
  CHECK_THROWS_AS(s.ideal("p"), InputError);
  CHECK_THROWS_AS(s.ideal("nope"), InputError);
}

TEST_CASE("printing and reparsing gives an equal session") {
  const Session s = parse_session(kSample);
  const Session again = parse_session(s.to_string());
  CHECK(again == s);
  CHECK(again.to_string() == s.to_string());
  CHECK(parse_session(testing::corpus().to_string()) == testing::corpus());
}

TEST_CASE("syntax and name errors carry locations") {
  CHECK(error_line("ideal I = x*y;") == 1);
  CHECK(error_line("ring QQ[x,y];\nideal I = x*y +;") == 2);
  CHECK(error_line("ring QQ[x,y,z];\npoint p = (0,0);") == 2);
  CHECK(error_line("ring QQ[x];\nideal I = x;\nideal I = x^2;") == 3);
  CHECK(error_line("ring QQ[x];\nresolution R = tautological J;") == 2);
  CHECK(error_line("ring QQ[x];\nideal I = z;") == 2);
  try {
    parse_session("ideal I = x*y;");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("ring not declared") != std::string::npos);
  }
}

TEST_CASE("commands produce documents with checks") {
  const Session s = parse_session(kSample);
  CommandOptions lci;
  lci.ideals = {"I"};
  lci.assert_result = true;
  const CommandResult r = run_command(s, "lci", lci);
  CHECK(r.lines.front() == "lci: true (C = N; N locally free)");
  CHECK(r.all_checks_pass());
  CHECK(r.result["lci"] == true);

  CommandOptions ot;
  ot.ideals = {"I"};
  ot.complexes = {"E"};
  const CommandResult broken = run_command(s, "check-obstruction-theory", ot);
  CHECK_FALSE(broken.all_checks_pass());

  CommandOptions none;
  CHECK_THROWS_AS(run_command(s, "gb", none), InputError);
  CHECK_THROWS_AS(run_command(s, "frobnicate", none), InputError);
  CHECK(command_names().size() == 22);
}

TEST_CASE("rendered JSON is stable and sorted") {
  const Session s = parse_session(kSample);
  CommandOptions opts;
  opts.resolutions = {"R", "R3"};
  const std::string a = render_json(run_command(s, "compare-resolutions", opts), std::nullopt);
  const std::string b = render_json(run_command(s, "compare-resolutions", opts), std::nullopt);
  CHECK(a == b);
  CHECK(a.find("\"checks\"") < a.find("\"command\""));
  CHECK(a.find("\"command\"") < a.find("\"inputs\""));
}

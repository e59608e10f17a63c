#include <doctest.h>

#include "fixtures.hpp"
#include "rsum/json_io.hpp"
#include "rsum/parser.hpp"

using namespace rsum;
namespace fx = rsum::fixtures;

TEST_CASE("stoichiometric coefficients") {
  NetworkDocument doc =
      parse_document("6 CO2 + 6 H2O -> C6H12O6 + 6 O2\n");
  CHECK(doc.species ==
        std::vector<std::string>{"CO2", "H2O", "C6H12O6", "O2"});
  REQUIRE(doc.reactions.size() == 1);
  CHECK(doc.reactions[0].reactant == Vec{6, 6, 0, 0});
  CHECK(doc.reactions[0].product == Vec{0, 0, 1, 6});
}

TEST_CASE("bidirectional arrows expand") {
  NetworkDocument doc = parse_document("E + A <=> EA\n");
  REQUIRE(doc.reactions.size() == 2);
  CHECK(doc.reactions[0] == inverse(doc.reactions[1]));
}

TEST_CASE("zero complex") {
  NetworkDocument doc = parse_document("0 -> P\nP -> 0\n");
  CHECK(doc.reactions[0].reactant == Vec{0});
  CHECK(doc.reactions[1].product == Vec{0});
}

TEST_CASE("comments, blanks, declarations, tight coefficients") {
  NetworkDocument doc = parse_document(
      "# a comment line\n"
      "species G, G', P\n"
      "\n"
      "G <=> G'   # inline comment\n"
      "2G' -> 2 G' + 3P\n");
  CHECK(doc.species == std::vector<std::string>{"G", "G'", "P"});
  REQUIRE(doc.reactions.size() == 3);
  CHECK(doc.reactions[2].reactant == Vec{0, 2, 0});
  CHECK(doc.reactions[2].product == Vec{0, 2, 3});
}

TEST_CASE("species sets") {
  NetworkDocument doc = parse_document(
      "species A, B, C\n"
      "set fast = B, C\n"
      "A -> B\n");
  REQUIRE(doc.sets.count("fast"));
  CHECK(doc.sets.at("fast") == std::vector<std::string>{"B", "C"});
}

TEST_CASE("rate annotations") {
  NetworkDocument doc = parse_document(
      "A -> B @ 2.5\n"
      "B <=> C @ 1.0, 3.0\n"
      "C -> A\n");
  CHECK(doc.rates[0] == 2.5);
  CHECK(doc.rates[1] == 1.0);
  CHECK(doc.rates[2] == 3.0);
  CHECK_FALSE(doc.rates[3].has_value());

  ReactionNetwork net = doc.to_network();
  RateAssignment rates = build_rate_assignment(doc, net, 7.0);
  REQUIRE(rates.rates.size() == 4);
  bool saw_default = false;
  for (double k : rates.rates) saw_default = saw_default || k == 7.0;
  CHECK(saw_default);
}

TEST_CASE("errors carry positions") {
  try {
    parse_document("A -> B\nB -> \n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 4);
  }

  try {
    parse_document("A + B -> A + B\n");
    FAIL("expected a net-zero error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(std::string(e.what()).find("zero net gain") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_document("species A\nA -> B\n"), ParseError);
  CHECK_THROWS_AS(parse_document("A -> B extra\n"), ParseError);
  CHECK_THROWS_AS(parse_document("A -> B @ fast\n"), ParseError);
}

TEST_CASE("duplicate reactions warn") {
  NetworkDocument doc = parse_document("A -> B\nA -> B\n");
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].find("duplicate") != std::string::npos);
  CHECK(doc.to_network().reactions().size() == 1);
}

TEST_CASE("printing complexes and reactions") {
  std::vector<std::string> names{"E", "A", "EA"};
  CHECK(print_complex({0, 0, 0}, names) == "0");
  CHECK(print_complex({1, 2, 0}, names) == "E + 2 A");
  CHECK(print_reaction(Reaction({1, 1, 0}, {0, 0, 1}), names) ==
        "E + A -> EA");
}

TEST_CASE("canonical print round-trips") {
  for (const ReactionNetwork& net :
       {fx::two_substrate(), fx::gene_model(), fx::wr_loss(),
        fx::single_gene()}) {
    std::string text = print_canonical(net);
    ReactionNetwork back = parse_document(text).to_network();
    REQUIRE(back == net);
    CHECK(print_canonical(back) == text);
  }
}

TEST_CASE("reactions from argument snippets share one species table") {
  NetworkDocument doc = parse_reaction_args({"0->R", "R->R+P", "R->0"});
  CHECK(doc.species == std::vector<std::string>{"R", "P"});
  Reaction total = sum_sequence(doc.reactions, 2);
  CHECK(print_reaction(total, doc.species) == "0 -> P");
}

TEST_CASE("json payloads carry the schema version") {
  ReactionNetwork net = fx::gene_model();
  json j = envelope("network", network_json(net));
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "network");
  CHECK(j["result"]["species"].size() == 3);
}

TEST_CASE("semi-linear sets round-trip through json") {
  SemiLinearSet s;
  s.components.push_back(
      LinearSet{{0, 0, 0, 0},
                {{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}});
  json j = semilinear_to_json(s);
  SemiLinearSet back = semilinear_from_json(j);
  REQUIRE(back.components.size() == 1);
  CHECK(back.components[0].base == s.components[0].base);
  CHECK(back.components[0].periods == s.components[0].periods);

  CHECK_THROWS_AS(semilinear_from_json(json{{"nope", 1}}), ValidationError);
}

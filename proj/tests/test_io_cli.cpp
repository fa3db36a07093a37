#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gpd/catalogue.hpp"
#include "gpd/io.hpp"
#include "support.hpp"

using namespace gpd;
using namespace gpd::testing;

TEST_CASE("groupoid records round-trip over the whole catalogue") {
  for (const auto& entry : groupoid_catalogue()) {
    CAPTURE(entry.name);
    Json j = serialize_groupoid(*entry.groupoid);
    FiniteGroupoid back = parse_groupoid(j);
    CHECK(back == *entry.groupoid);
    // Twice through the pipe is the same as once.
    CHECK(serialize_groupoid(back) == j);
  }
}

TEST_CASE("constructor shorthands") {
  CHECK(parse_groupoid(Json{{"pair", 3}}) == pair_groupoid(3));
  Json z2 = Json::parse(R"({"group": {"elements": ["e","g"], "table": [["e","g"],["g","e"]]}})");
  CHECK(parse_groupoid(z2).size() == 2);
  Json act = Json::parse(R"({"action": {"group": {"elements": ["e","g"],
    "table": [[0,1],[1,0]]}, "points": ["1","2"],
    "map": {"e": {"1":"1","2":"2"}, "g": {"1":"2","2":"1"}}}})");
  CHECK(parse_groupoid(act).size() == 4);
  Json uni = Json{{"union", Json::array({Json{{"pair", 1}}, Json{{"pair", 1}}})}};
  CHECK(parse_groupoid(uni).unit_count() == 2);
  Json bundle = Json::parse(R"({"bundle": [{"table": [[0,1],[1,0]]}]})");
  CHECK(parse_groupoid(bundle).size() == 2);
}

TEST_CASE("malformed groupoid records raise parse errors") {
  CHECK_THROWS_AS(parse_groupoid(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(parse_groupoid(Json::parse(R"({"morphisms": ["a"]})")), ParseError);
  CHECK_THROWS_AS(parse_groupoid(Json::parse(
                      R"({"morphisms": ["a"], "range": {"a": "zzz"},
                          "source": {"a": "a"}, "inverse": {"a": "a"}, "compose": []})")),
                  ParseError);
}

TEST_CASE("element records round-trip") {
  std::mt19937 rng(113);
  for (const auto& entry : groupoid_catalogue()) {
    for (int trial = 0; trial < 5; ++trial) {
      AlgebraElement f = random_element(entry.groupoid, rng);
      AlgebraElement back = parse_element(serialize_element(f), entry.groupoid);
      CHECK(back == f);
    }
  }
  auto g = groupoid_catalogue().front().groupoid;
  CHECK_THROWS_AS(parse_element(Json::parse(R"({"nope": [1,1,0,1]})"), g), ParseError);
  CHECK_THROWS_AS(parse_element(Json::parse(R"x({"(1<-1)": [1,0,0,1]})x"), g), ParseError);
}

TEST_CASE("graph records round-trip") {
  for (const auto& entry : graph_catalogue()) {
    CAPTURE(entry.name);
    Json j = serialize_graph(*entry.graph);
    CHECK(parse_graph(j) == *entry.graph);
    CHECK(serialize_graph(parse_graph(j)) == j);
  }
  CHECK_THROWS_AS(parse_graph(Json::parse(R"({"vertices": ["v"]})")), ParseError);
}

TEST_CASE("graph element records round-trip, including empty legs") {
  std::mt19937 rng(127);
  for (const auto& entry : graph_catalogue()) {
    for (int trial = 0; trial < 5; ++trial) {
      GraphAlgebraElement x = random_graph_element(entry.graph, rng);
      GraphAlgebraElement back = parse_graph_element(serialize_graph_element(x), entry.graph);
      REQUIRE(back.terms().size() == x.terms().size());
      for (std::size_t i = 0; i < x.terms().size(); ++i) {
        CHECK(back.terms()[i].first == x.terms()[i].first);
        CHECK(back.terms()[i].second == x.terms()[i].second);
      }
    }
  }
  auto g = graph_catalogue().front().graph;  // the single loop
  Json missing_anchor = Json::parse(R"([{"coeff": [1,1,0,1], "mu": [], "nu": []}])");
  CHECK_THROWS_AS(parse_graph_element(missing_anchor, g), ParseError);
}

TEST_CASE("system records round-trip") {
  for (const auto& entry : action_catalogue()) {
    DynamicalSystem s;
    s.action = entry.action;
    Json j = serialize_system(s);
    DynamicalSystem back = parse_system(j);
    REQUIRE(back.action.has_value());
    CHECK(back.action->map == entry.action.map);
    CHECK(back.action->points == entry.action.points);
    CHECK(back.action->monoid.mul == entry.action.monoid.mul);
    CHECK(serialize_system(back) == j);
  }
  for (const auto& entry : graph_catalogue()) {
    DynamicalSystem s = deaconu_renault(*entry.graph);
    DynamicalSystem back = parse_system(serialize_system(s));
    REQUIRE(back.shift_graph.has_value());
    CHECK(*back.shift_graph == *entry.graph);
  }
}

TEST_CASE("result records round-trip and demand a version") {
  ResultRecord r;
  r.command = "check --input g.json --property simple";
  r.verdicts["simple"] = true;
  r.verdicts["center_dimension"] = 1;
  r.witnesses["isotropy"] = "g";
  r.timing_ms = 1.5;
  ResultRecord back = parse_result(serialize_result(r));
  CHECK(back == r);
  Json j = serialize_result(r);
  j.erase("version");
  CHECK_THROWS_AS(parse_result(j), ParseError);
}

TEST_CASE("coefficients reject zero denominators") {
  auto g = groupoid_catalogue().front().groupoid;
  Json bad = Json::object();
  bad[g->label(0)] = Json::array({1, 0, 0, 1});
  CHECK_THROWS_AS(parse_element(bad, g), ParseError);
}

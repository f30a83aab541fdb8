#include <doctest.h>

#include <set>

#include "mcg/error.hpp"
#include "mcg/fixtures.hpp"

using namespace mcg;

TEST_CASE("every fixture yields the pair type it was drawn for") {
  const auto fixtures = load_fixture_dir(MCG_FIXTURE_DIR);
  REQUIRE(fixtures.size() == 20);
  std::set<std::string> names;
  int type1 = 0, type2 = 0;
  for (const auto& res : check_fixtures(fixtures)) {
    CAPTURE(res.name);
    CHECK_FALSE(res.error.has_value());
    CHECK(res.actual == res.expected);
    CHECK(res.passed());
    CHECK(res.genus == hurwitz_riemann_genus(fixtures[names.size()].signature, fixtures[names.size()].theta.order));
    names.insert(res.name);
    type1 += res.expected == PairType::type1;
    type2 += res.expected == PairType::type2;
  }
  CHECK(names.size() == fixtures.size());
  CHECK(type1 > 0);
  CHECK(type2 > 0);
}

TEST_CASE("fixture curves are simple two-sided and non-separating") {
  for (const auto& f : load_fixture_dir(MCG_FIXTURE_DIR)) {
    CAPTURE(f.name);
    CHECK_FALSE(f.construction.empty());
    const auto g = fixture_surface(f);
    const auto c = fixture_curve(f, g);
    const auto p = curve_properties(c, g);
    CHECK(p.simple);
    CHECK(p.two_sided);
    CHECK(complement_profile({c}, g).connected);
    const int i = intersection_count(c, deck_image(c, g), g);
    CHECK(i == (f.expected == PairType::type1 ? 1 : 0));
  }
}

TEST_CASE("malformed fixtures") {
  CHECK_THROWS_AS(parse_fixture("{"), Error);
  CHECK_THROWS_AS(parse_fixture(R"({"name": "x"})"), Error);
  const std::string base = R"j({"name":"t","signature":"(5;-;[];{})","order":2,
    "images":{"d1":1,"d2":0,"d3":0,"d4":0,"d5":0},"y":"d1","expected":"Type2","curve":)j";
  const auto bad_edge = parse_fixture(base + R"([{"copy":0,"in":["q1",1,2],"out":["a2",1,2]}]})");
  CHECK_FALSE(check_fixture(bad_edge).passed());
  CHECK(check_fixture(bad_edge).error.has_value());
  const auto bad_pos = parse_fixture(base + R"([{"copy":0,"in":["a2",2,2],"out":["a2*",1,2]}]})");
  CHECK(check_fixture(bad_pos).error.has_value());
  CHECK_THROWS_AS(parse_fixture(base + R"([{"copy":0,"in":["a2",1],"out":["a2*",1,2]}]})"), Error);
  CHECK_THROWS_AS(load_fixture_dir("/nonexistent/fixtures"), Error);
}

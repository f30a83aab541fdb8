#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/fixtures.hpp"
#include "mcg/polygon.hpp"

using namespace mcg;

namespace {

GluedSurface single(const char* sig, std::map<std::string, int> images) {
  return assemble_fundamental_domain(parse_signature(sig), Epimorphism{1, std::move(images)}, 0);
}

Chord chord(int copy, int in_edge, std::int64_t in_num, int out_edge, std::int64_t out_num, std::int64_t den = 8) {
  return {copy, {in_edge, in_num, den}, {out_edge, out_num, den}};
}

CurveFixture fixture(const std::string& name) {
  return load_fixture(std::string(MCG_FIXTURE_DIR) + "/" + name + ".json");
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_parameters;
}

}  // namespace

TEST_CASE("closed words") {
  CHECK(classify_symbol(parse_symbol("a b a' b'")) == Classification{true, 1, 0});
  CHECK(classify_symbol(parse_symbol("a a*")) == Classification{false, 1, 1});
  CHECK(classify_symbol(parse_symbol("a a* b b*")) == Classification{false, 2, 0});
  CHECK(classify_symbol(parse_symbol("a b a' b' c d c' d'")) == Classification{true, 2, -2});
  CHECK(to_string(parse_symbol("x1  x1' a1 a1*")) == "x1 x1' a1 a1*");
  CHECK(code_of([] { classify_symbol(parse_symbol("a b a'")); }) == Errc::malformed_symbol);
  CHECK(code_of([] { parse_symbol("a a' a*"); }) == Errc::malformed_symbol);
}

TEST_CASE("orbifold words") {
  CHECK(to_string(surface_symbol(parse_signature("(1;-;[3];{})"))) == "x1 x1' a1 a1*");
  CHECK(to_string(surface_symbol(parse_signature("(0;+;[];{()})"))) == "e1 g1 e1'");
  CHECK(to_string(surface_symbol(parse_signature("(1;+;[];{})"))) == "a1 b1' a1' b1");
  const auto sym = surface_symbol(parse_signature("(0;+;[];{()})"));
  CHECK(sym.tokens[1].kind == EdgeKind::boundary);
}

TEST_CASE("assembled domains have the genus of the cover") {
  const auto free5 = parse_signature("(5;-;[];{})");
  for (const auto& t : enumerate_epimorphisms(free5, 2))
    for (const auto& [name, v] : t.images)
      if (v == 1) CHECK(classify(assemble_fundamental_domain(free5, t, name)) == Classification{false, 8, -6});

  for (int r = 1; r <= 5; ++r) {
    const auto sig = NecSignature::make(1, Sign::minus, std::vector<int>(r, 3), 0);
    for (const auto& t : enumerate_epimorphisms(sig, 3)) {
      if (t.image("x1") != 1) continue;
      const auto c = classify(assemble_fundamental_domain(sig, t, "x1"));
      CHECK_FALSE(c.orientable);
      CHECK(c.genus == hurwitz_riemann_genus(sig, 3));
    }
  }

  for (const char* s : {"(1;+;[];{})", "(3;-;[];{})", "(2;+;[];{})"}) {
    const auto sig = parse_signature(s);
    Epimorphism trivial{1, {}};
    for (const auto& g : presentation(sig).generators) trivial.images[g.name] = 0;
    CHECK(classify(assemble_fundamental_domain(sig, trivial, 0)) == classify_symbol(surface_symbol(sig)));
  }
}

TEST_CASE("assembly errors") {
  const auto sig = parse_signature("(1;-;[4,4];{})");
  const Epimorphism t{4, {{"x1", 1}, {"x2", 1}, {"d1", 1}}};
  CHECK(code_of([&] { assemble_fundamental_domain(sig, t, 2); }) == Errc::generator_not_primitive);
  const Epimorphism bad{4, {{"x1", 2}, {"x2", 1}, {"d1", 0}}};
  CHECK(code_of([&] { assemble_fundamental_domain(sig, bad, 1); }) == Errc::not_admissible);
  CHECK(code_of([&] { assemble_fundamental_domain(sig, t, std::string("z9")); }) == Errc::invalid_parameters);
  CHECK(code_of([] {
          assemble_fundamental_domain(parse_signature("(1;-;[2];{})"), Epimorphism{1, {{"x1", 0}, {"d1", 0}}}, 0);
        }) == Errc::not_admissible);
}

TEST_CASE("curves on single polygons") {
  const auto torus = single("(1;+;[];{})", {{"a1", 0}, {"b1", 0}});  // a1 b1' a1' b1
  const CurveDiagram meridian{{chord(0, 2, 4, 0, 4)}};
  CHECK_NOTHROW(validate_curve(meridian, torus));
  CHECK(curve_properties(meridian, torus).simple);
  CHECK(curve_properties(meridian, torus).two_sided);
  CHECK(complement_profile({meridian}, torus) == ComplementProfile{true, false});

  const CurveDiagram parallel{{chord(0, 2, 6, 0, 2)}};
  CHECK(intersection_count(meridian, parallel, torus) == 0);
  CHECK_FALSE(complement_profile({meridian, parallel}, torus).connected);
  CHECK(is_standard_pair(meridian, parallel, torus) == PairType::none);
  CHECK(code_of([&] { intersection_count(meridian, meridian, torus); }) == Errc::not_in_general_position);

  const CurveDiagram longitude{{chord(0, 3, 4, 1, 4)}};
  CHECK(intersection_count(meridian, longitude, torus) == 1);

  const auto plane = single("(1;-;[];{})", {{"d1", 0}});  // a1 a1*
  const CurveDiagram core{{chord(0, 1, 4, 0, 4)}};
  CHECK(curve_properties(core, plane).simple);
  CHECK_FALSE(curve_properties(core, plane).two_sided);
  CHECK(complement_profile({core}, plane).connected);
  CHECK(is_standard_pair(core, core, plane) == PairType::none);

  CHECK(code_of([&] { validate_curve(CurveDiagram{{chord(0, 2, 4, 0, 3)}}, torus); }) == Errc::invalid_parameters);
  CHECK(code_of([&] { validate_curve(CurveDiagram{{chord(0, 0, 4, 0, 4)}}, torus); }) == Errc::degenerate_curve);
}

TEST_CASE("deck transformations") {
  const auto sig = parse_signature("(5;-;[];{})");
  const Epimorphism t{2, {{"d1", 1}, {"d2", 0}, {"d3", 0}, {"d4", 0}, {"d5", 0}}};
  const auto glued = assemble_fundamental_domain(sig, t, "d1");
  const CurveDiagram c{{chord(0, 3, 2, 2, 3), chord(0, 3, 5, 2, 6)}};
  const auto image = deck_image(c, glued);
  for (const auto& ch : image.chords) CHECK(ch.copy == 1);

  for (const auto& f : load_fixture_dir(MCG_FIXTURE_DIR)) {
    CAPTURE(f.name);
    const auto g = fixture_surface(f);
    const auto curve = fixture_curve(f, g);
    auto moved = curve;
    for (int i = 0; i < g.copies; ++i) {
      if (i > 0) CHECK(curve_properties(moved, g).simple == curve_properties(curve, g).simple);
      moved = deck_image(moved, g);
    }
    REQUIRE(moved.chords.size() == curve.chords.size());
    for (std::size_t k = 0; k < curve.chords.size(); ++k) {
      CHECK(moved.chords[k].copy == curve.chords[k].copy);
      CHECK(moved.chords[k].in == curve.chords[k].in);
      CHECK(moved.chords[k].out == curve.chords[k].out);
    }
  }
}

TEST_CASE("pushed-off reflection axis") {
  const auto f = fixture("order4-connector-axis-in-kernel");
  const auto g = fixture_surface(f);
  const auto c = fixture_curve(f, g);
  CHECK(curve_properties(c, g).simple);
  CHECK(curve_properties(c, g).two_sided);
  CHECK(complement_profile({c, deck_image(c, g)}, g) == ComplementProfile{true, true});
}

TEST_CASE("intersection counts of drawn pairs") {
  const auto one = fixture("free-order3");
  const auto g1 = fixture_surface(one);
  const auto c1 = fixture_curve(one, g1);
  CHECK(intersection_count(c1, deck_image(c1, g1), g1) == 1);

  const auto two = fixture("order4-glide-second-glide-three");
  const auto g2 = fixture_surface(two);
  const auto c2 = fixture_curve(two, g2);
  CHECK(intersection_count(c2, deck_image(deck_image(c2, g2), g2), g2) == 0);
  CHECK(intersection_count(c2, deck_image(c2, g2), g2) == 0);
}

TEST_CASE("pair type text") {
  for (auto t : {PairType::type1, PairType::type2, PairType::none}) CHECK(parse_pair_type(to_string(t)) == t);
  CHECK(to_string(PairType::type1) == "Type1");
  CHECK_THROWS_AS(parse_pair_type("Type3"), Error);
}

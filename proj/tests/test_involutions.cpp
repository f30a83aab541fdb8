#include <doctest.h>

#include <algorithm>
#include <set>

#include "mcg/error.hpp"
#include "mcg/involutions.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

// Classes read off every Z2 action, with the epimorphisms found by brute force.
std::set<InvolutionClass> classes_from_actions(int g) {
  std::set<InvolutionClass> out;
  for (const auto& sig : enumerate_signatures(g, 2)) {
    if (std::any_of(sig.periods.begin(), sig.periods.end(), [](int m) { return m != 2; })) continue;
    for (const auto& t : oracle::all_admissible(sig, 2)) out.insert(involution_class_of(sig, t));
  }
  return out;
}

}  // namespace

TEST_CASE("class text round trip") {
  const auto c = make_class(Family::F4, 9, 3, 1, 1, 1);
  CHECK(to_string(c) == "F4[g=9,h=3,r=1,k=2,k+=1,k-=1,Q=nonor,sep=false]");
  CHECK(parse_involution_class(to_string(c)) == c);
  for (int g = 5; g <= 12; ++g)
    for (const auto& x : enumerate_classes(g)) CHECK(parse_involution_class(to_string(x)) == x);
  CHECK_THROWS_AS(parse_involution_class("F4[g=9]"), Error);
  CHECK_THROWS_AS(make_class(Family::F6, 8, 1, 2, 2, 0), Error);
}

TEST_CASE("enumerated classes satisfy the fixed-point constraints") {
  for (int g = 5; g <= 16; ++g)
    for (const auto& c : enumerate_classes(g)) {
      CAPTURE(to_string(c));
      const int eps = c.quotient_orientable ? 2 : 1;
      CHECK(c.ovals == c.two_sided_ovals + c.one_sided_ovals);
      CHECK((c.isolated_points + c.one_sided_ovals) % 2 == 0);
      CHECK((g - c.isolated_points) % 2 == 0);
      CHECK(g == 2 * eps * c.quotient_genus + 2 * c.ovals - 2 + c.isolated_points);
      CHECK(c.isolated_points + 2 * c.ovals <= g + 2);
      if (!c.quotient_orientable) CHECK(c.isolated_points + 2 * c.ovals <= g);
      CHECK(c.fixed_set_separating == (c.family == Family::F6));
    }
}

TEST_CASE("genus 5 and 6 examples") {
  for (const auto& c : enumerate_classes(5)) {
    CHECK(c.isolated_points % 2 == 1);
    CHECK(c.one_sided_ovals % 2 == 1);
  }
  std::set<Family> free;
  for (const auto& c : enumerate_classes(6))
    if (c.isolated_points == 0 && c.ovals == 0) free.insert(c.family);
  CHECK(free == std::set<Family>{Family::F01, Family::F02});
  CHECK_THROWS_AS(enumerate_classes(4), Error);
}

TEST_CASE("taxonomy equals the classes of all Z2 actions") {
  for (int g = 5; g <= 9; ++g) {
    CAPTURE(g);
    const auto classes = enumerate_classes(g);
    CHECK(std::set<InvolutionClass>(classes.begin(), classes.end()) == classes_from_actions(g));
    for (const auto& c : classes) {
      const auto sig = signature_of(c);
      CHECK(hurwitz_riemann_genus(sig, 2) == g);
    }
  }
}

TEST_CASE("surgery steps") {
  SurgeryState s;
  s.surface_orientable = false;
  s.genus = 8;
  s.isolated_points = 4;
  s.quotient_orientable = false;
  s.quotient_genus = 3;
  REQUIRE(s.hurwitz_riemann_holds());
  const auto t = apply_surgery(s, {SurgeryKind::blow_up_isolated});
  CHECK(t.genus == 9);
  CHECK(t.isolated_points == 3);
  CHECK(t.ovals() == 1);
  CHECK(t.one_sided_ovals == 1);
  CHECK(t.quotient_genus == 3);
  CHECK(t.hurwitz_riemann_holds());

  CHECK(apply_surgery(s, {SurgeryKind::add_handle}).hurwitz_riemann_holds());
  CHECK_THROWS_AS(apply_surgery(s, {SurgeryKind::glue_surfaces}), Error);
  SurgeryState bare = s;
  bare.isolated_points = 0;
  CHECK_THROWS_AS(apply_surgery(bare, {SurgeryKind::blow_up_isolated}), Error);

  // rotation with 2-orbits blown up
  for (int r = 2; r <= 10; r += 2) {
    auto x = base_state({BaseKind::rotation, r / 2 - 1, 0});
    for (int h = 1; h <= 3; ++h) {
      x = apply_surgery(x, {SurgeryKind::blow_up_two_orbit});
      CHECK(x.isolated_points == r);
      CHECK(x.ovals() == 0);
      CHECK_FALSE(x.quotient_orientable);
      CHECK(x.quotient_genus == h);
      CHECK(x.hurwitz_riemann_holds());
    }
  }
}

TEST_CASE("model recipes reproduce every class") {
  for (int g = 5; g <= 16; ++g)
    for (const auto& c : enumerate_classes(g)) {
      CAPTURE(to_string(c));
      const auto recipe = model_recipe(c);
      const auto end = replay(recipe);
      CHECK(reproduces(end, c));
      CHECK(end.hurwitz_riemann_holds());
      if (c.family == Family::F1) {
        CHECK(recipe.base == BaseAction{BaseKind::rotation, c.isolated_points / 2 - 1, 0});
        CHECK(recipe.steps.size() == static_cast<std::size_t>(c.quotient_genus));
      }
      if (c.family == Family::F6) {
        CHECK(recipe.base == BaseAction{BaseKind::reflection, c.ovals - 1, 0});
        CHECK(recipe.steps.size() == static_cast<std::size_t>(c.quotient_genus));
      }
      if (c.family == Family::F4 && c.two_sided_ovals > 0) {
        CHECK(recipe.base.kind == BaseKind::reflection);
        CHECK(recipe.steps.front().kind == SurgeryKind::glue_surfaces);
      }
    }
}

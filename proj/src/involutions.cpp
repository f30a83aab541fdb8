#include "mcg/involutions.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "mcg/error.hpp"

namespace mcg {

namespace {

constexpr std::array<std::string_view, 11> family_names{"F01", "F02", "F1", "F2", "F3", "F4",
                                                        "F5",  "F6",  "F7", "F8", "F9"};

// Smallest quotient genus for which the family exists.
int min_quotient_genus(Family f) {
  switch (f) {
    case Family::F01: return 2;
    case Family::F02: return 3;
    case Family::F3:
    case Family::F5: return 0;
    case Family::F7: return 2;
    case Family::F8: return 3;
    default: return 1;
  }
}

bool orientable_quotient(Family f) { return f == Family::F3 || f == Family::F5 || f == Family::F9; }

}  // namespace

std::string_view to_string(Family family) { return family_names[static_cast<std::size_t>(family)]; }

Family parse_family(std::string_view text) {
  for (std::size_t i = 0; i < family_names.size(); ++i)
    if (family_names[i] == text) return static_cast<Family>(i);
  throw Error(Errc::parse_error, "unknown family " + std::string(text));
}

std::string to_string(const InvolutionClass& c) {
  return std::string(to_string(c.family)) + "[g=" + std::to_string(c.genus) +
         ",h=" + std::to_string(c.quotient_genus) + ",r=" + std::to_string(c.isolated_points) +
         ",k=" + std::to_string(c.ovals) + ",k+=" + std::to_string(c.two_sided_ovals) +
         ",k-=" + std::to_string(c.one_sided_ovals) + ",Q=" + (c.quotient_orientable ? "or" : "nonor") +
         ",sep=" + (c.fixed_set_separating ? "true" : "false") + "]";
}

InvolutionClass parse_involution_class(std::string_view text) {
  static const std::regex shape(
      R"((F\d+)\[g=(\d+),h=(\d+),r=(\d+),k=(\d+),k\+=(\d+),k-=(\d+),Q=(or|nonor),sep=(true|false)\])");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, shape)) throw Error(Errc::parse_error, "bad class: " + s);
  InvolutionClass c{parse_family(m[1].str()), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]),
                    std::stoi(m[5]),          std::stoi(m[6]), std::stoi(m[7]), m[8] == "or",
                    m[9] == "true"};
  if (!satisfies_invariants(c)) throw Error(Errc::invalid_parameters, "inconsistent class: " + s);
  return c;
}

bool satisfies_invariants(const InvolutionClass& c) {
  const int g = c.genus, h = c.quotient_genus, r = c.isolated_points, k = c.ovals;
  const int kp = c.two_sided_ovals, km = c.one_sided_ovals;
  if (g < 5 || h < 0 || r < 0 || kp < 0 || km < 0) return false;
  if (k != kp + km) return false;
  if ((r + km) % 2 != 0 || (g - r) % 2 != 0) return false;
  const int eps = c.quotient_orientable ? 2 : 1;
  if (g != 2 * eps * h + 2 * k - 2 + r) return false;
  if (r + 2 * k > g + 2) return false;
  if (!c.quotient_orientable && r + 2 * k > g) return false;
  if (c.quotient_orientable != orientable_quotient(c.family)) return false;
  if (h < min_quotient_genus(c.family)) return false;
  if (c.fixed_set_separating != (c.family == Family::F6)) return false;

  switch (c.family) {
    case Family::F01:
    case Family::F02: return r == 0 && k == 0 && g % 2 == 0;
    case Family::F1: return r > 0 && k == 0;
    case Family::F2:
    case Family::F3: return r > 0 && km == 0 && kp > 0;
    case Family::F4:
    case Family::F5: return km > 0;
    case Family::F6: return r == 0 && km == 0 && k > 0;
    case Family::F7: return r == 0 && km == 0 && k > 0 && 2 * k < g;
    case Family::F8: return r == 0 && km == 0 && k > 0 && 2 * k < g - 2;
    case Family::F9: return r == 0 && km == 0 && k > 0 && (2 * k - g - 2) % 4 == 0;
  }
  return false;
}

InvolutionClass make_class(Family family, int genus, int quotient_genus, int isolated_points,
                           int two_sided_ovals, int one_sided_ovals) {
  InvolutionClass c{family,
                    genus,
                    quotient_genus,
                    isolated_points,
                    two_sided_ovals + one_sided_ovals,
                    two_sided_ovals,
                    one_sided_ovals,
                    orientable_quotient(family),
                    family == Family::F6};
  if (!satisfies_invariants(c)) throw Error(Errc::invalid_parameters, "no such class: " + to_string(c));
  return c;
}

std::vector<InvolutionClass> enumerate_classes(int genus) {
  if (genus < 5) throw Error(Errc::genus_too_small, "genus " + std::to_string(genus));
  const int g = genus;
  std::vector<InvolutionClass> out;
  for (std::size_t f = 0; f < family_names.size(); ++f) {
    const auto family = static_cast<Family>(f);
    const int eps = orientable_quotient(family) ? 2 : 1;
    for (int h = 0; 2 * eps * h <= g + 2; ++h)
      for (int r = 0; r <= g + 2; ++r)
        for (int km = 0; r + 2 * km <= g + 2; ++km) {
          // the genus formula fixes k+
          const int twice_kp = g - 2 * eps * h + 2 - r - 2 * km;
          if (twice_kp < 0 || twice_kp % 2 != 0) continue;
          InvolutionClass c{family, g, h, r, km + twice_kp / 2, twice_kp / 2, km,
                            eps == 2, family == Family::F6};
          if (satisfies_invariants(c)) out.push_back(c);
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NecSignature signature_of(const InvolutionClass& c) {
  return NecSignature::make(c.quotient_genus, c.quotient_orientable ? Sign::plus : Sign::minus,
                            std::vector<int>(static_cast<std::size_t>(c.isolated_points), 2), c.ovals);
}

InvolutionClass involution_class_of(const NecSignature& sig, const Epimorphism& theta) {
  if (theta.order != 2 || !std::all_of(sig.periods.begin(), sig.periods.end(), [](int m) { return m == 2; }))
    throw Error(Errc::unsupported_family, "not an involution signature: " + to_string(sig));
  if (!is_admissible(sig, theta)) throw Error(Errc::not_admissible, to_string(sig));
  const auto inv = std::get<Order2Invariant>(conjugacy_invariants(sig, theta));
  const int r = sig.period_count(), k = sig.cycles, km = inv.one_sided_ovals;

  Family family;
  if (sig.sign == Sign::plus) {
    family = km > 0 ? Family::F5 : (r > 0 ? Family::F3 : Family::F9);
  } else if (km > 0) {
    family = Family::F4;
  } else if (r > 0) {
    family = k == 0 ? Family::F1 : Family::F2;
  } else if (k > 0) {
    family = *inv.glides_all_zero ? Family::F6 : (*inv.glide_sum == 1 ? Family::F7 : Family::F8);
  } else {
    family = *inv.glide_sum == 1 ? Family::F01 : Family::F02;
  }
  return make_class(family, hurwitz_riemann_genus(sig, 2), sig.quotient_genus, r, k - km, km);
}

// Surgery calculus

bool SurgeryState::hurwitz_riemann_holds() const {
  const int eps = quotient_orientable ? 2 : 1;
  return euler_genus() == 2 * eps * quotient_genus + 2 * ovals() - 2 + isolated_points;
}

std::string to_string(const SurgeryStep& step) {
  switch (step.kind) {
    case SurgeryKind::blow_up_isolated: return "BlowUpIsolated";
    case SurgeryKind::blow_up_non_isolated:
      return step.oval == OvalSide::two_sided ? "BlowUpNonIsolated(two-sided)" : "BlowUpNonIsolated(one-sided)";
    case SurgeryKind::blow_up_two_orbit: return "BlowUp2Orbit";
    case SurgeryKind::add_handle: return "AddHandle";
    case SurgeryKind::glue_surfaces:
      return "GlueSurfaces(rotation genus " + std::to_string(step.factor.genus) + ", " +
             std::to_string(step.factor.conjugate_pairs) + " conjugate pairs)";
  }
  return "?";
}

SurgeryState base_state(const BaseAction& base) {
  if (base.genus < 0 || base.conjugate_pairs < 0) throw Error(Errc::invalid_parameters, "negative base genus");
  SurgeryState s;
  s.surface_orientable = true;
  s.genus = base.genus + 2 * base.conjugate_pairs;
  s.quotient_orientable = true;
  s.quotient_genus = base.conjugate_pairs;
  switch (base.kind) {
    case BaseKind::reflection:
      s.two_sided_ovals = base.genus + 1;
      break;
    case BaseKind::rotation:
      s.preserves_orientation = true;
      s.isolated_points = 2 * base.genus + 2;
      break;
    case BaseKind::free_rotation:
      if (base.genus != 1) throw Error(Errc::invalid_parameters, "free rotation base is a torus");
      s.preserves_orientation = true;
      s.quotient_genus = base.conjugate_pairs + 1;
      break;
    case BaseKind::sphere_antipodism:
    case BaseKind::torus_antipodism:
      if (base.conjugate_pairs != 0 || base.genus != (base.kind == BaseKind::torus_antipodism ? 1 : 0))
        throw Error(Errc::invalid_parameters, "antipodism base is a sphere or a torus");
      s.quotient_orientable = false;
      s.quotient_genus = base.genus + 1;
      break;
  }
  return s;
}

namespace {

void make_non_orientable(SurgeryState& s, int added_crosscaps) {
  s.genus = s.euler_genus() + added_crosscaps;
  s.surface_orientable = false;
  s.preserves_orientation = false;
}

}  // namespace

SurgeryState apply_surgery(const SurgeryState& state, const SurgeryStep& step) {
  SurgeryState s = state;
  switch (step.kind) {
    case SurgeryKind::blow_up_isolated:
      if (s.isolated_points < 1) throw Error(Errc::not_applicable, "no isolated fixed point");
      --s.isolated_points;
      ++s.one_sided_ovals;
      make_non_orientable(s, 1);
      break;
    case SurgeryKind::blow_up_non_isolated:
      if (step.oval == OvalSide::two_sided) {
        if (s.two_sided_ovals < 1) throw Error(Errc::not_applicable, "no two-sided oval");
        --s.two_sided_ovals;
        ++s.one_sided_ovals;
      } else {
        if (s.one_sided_ovals < 1) throw Error(Errc::not_applicable, "no one-sided oval");
        --s.one_sided_ovals;
        ++s.two_sided_ovals;
      }
      ++s.isolated_points;
      make_non_orientable(s, 1);
      break;
    case SurgeryKind::blow_up_two_orbit:
      if (s.quotient_orientable) {
        s.quotient_genus = 2 * s.quotient_genus + 1;
        s.quotient_orientable = false;
      } else {
        ++s.quotient_genus;
      }
      make_non_orientable(s, 2);
      break;
    case SurgeryKind::add_handle:
      ++s.two_sided_ovals;
      if (s.surface_orientable && !s.preserves_orientation)
        ++s.genus;
      else
        make_non_orientable(s, 2);
      break;
    case SurgeryKind::glue_surfaces: {
      if (!s.surface_orientable || s.preserves_orientation)
        throw Error(Errc::not_applicable, "gluing needs an orientation-reversing action on an orientable surface");
      if (step.factor.kind != BaseKind::rotation)
        throw Error(Errc::not_applicable, "the glued factor must be a rotation");
      const SurgeryState y = base_state(step.factor);
      const int genus = 2 * (s.genus + y.genus + 1);
      s.surface_orientable = false;
      s.preserves_orientation = false;
      s.genus = genus;
      s.isolated_points += y.isolated_points;
      s.quotient_genus += y.quotient_genus;
      break;
    }
  }
  return s;
}

ModelRecipe model_recipe(const InvolutionClass& c) {
  if (!satisfies_invariants(c)) throw Error(Errc::invalid_parameters, to_string(c));
  const int h = c.quotient_genus, r = c.isolated_points, k = c.ovals, km = c.one_sided_ovals;
  ModelRecipe recipe;
  auto repeat = [&](int times, SurgeryStep step) {
    for (int i = 0; i < times; ++i) recipe.steps.push_back(step);
  };
  const SurgeryStep two_orbit{SurgeryKind::blow_up_two_orbit};
  const SurgeryStep handle{SurgeryKind::add_handle};
  const SurgeryStep isolated{SurgeryKind::blow_up_isolated};
  auto non_isolated_pairs = [&](int pairs) {
    for (int i = 0; i < pairs; ++i) {
      recipe.steps.push_back({SurgeryKind::blow_up_non_isolated, OvalSide::two_sided});
      recipe.steps.push_back({SurgeryKind::blow_up_non_isolated, OvalSide::one_sided});
    }
  };
  // rotated part of the glued models
  const int rotated_genus = (km + r - 2) / 2;

  switch (c.family) {
    case Family::F01:
      recipe.base = {BaseKind::sphere_antipodism, 0, 0};
      repeat(h - 1, two_orbit);
      break;
    case Family::F02:
      recipe.base = {BaseKind::torus_antipodism, 1, 0};
      repeat(h - 2, two_orbit);
      break;
    case Family::F1:
      recipe.base = {BaseKind::rotation, r / 2 - 1, 0};
      repeat(h, two_orbit);
      break;
    case Family::F2:
      recipe.base = {BaseKind::reflection, k - 1, 0};
      repeat(h, two_orbit);
      non_isolated_pairs(r / 2);
      break;
    case Family::F3:
      recipe.base = {BaseKind::reflection, k - 1, h};
      non_isolated_pairs(r / 2);
      break;
    case Family::F4:
    case Family::F5: {
      const int pairs = c.family == Family::F5 ? h : 0;
      if (c.two_sided_ovals > 0) {
        recipe.base = {BaseKind::reflection, c.two_sided_ovals - 1, 0};
        recipe.steps.push_back({SurgeryKind::glue_surfaces, OvalSide::two_sided, {BaseKind::rotation, rotated_genus, pairs}});
      } else {
        recipe.base = {BaseKind::rotation, rotated_genus, pairs};
      }
      if (c.family == Family::F4) repeat(h, two_orbit);
      repeat(km, isolated);
      break;
    }
    case Family::F6:
      recipe.base = {BaseKind::reflection, k - 1, 0};
      repeat(h, two_orbit);
      break;
    case Family::F7:
      recipe.base = {BaseKind::sphere_antipodism, 0, 0};
      repeat(h - 1, two_orbit);
      repeat(k, handle);
      break;
    case Family::F8:
      recipe.base = {BaseKind::torus_antipodism, 1, 0};
      repeat(h - 2, two_orbit);
      repeat(k, handle);
      break;
    case Family::F9:
      recipe.base = {BaseKind::free_rotation, 1, h - 1};
      repeat(k, handle);
      break;
  }
  return recipe;
}

SurgeryState replay(const ModelRecipe& recipe) {
  SurgeryState s = base_state(recipe.base);
  for (const auto& step : recipe.steps) s = apply_surgery(s, step);
  return s;
}

bool reproduces(const SurgeryState& s, const InvolutionClass& c) {
  return !s.surface_orientable && s.genus == c.genus && s.isolated_points == c.isolated_points &&
         s.two_sided_ovals == c.two_sided_ovals && s.one_sided_ovals == c.one_sided_ovals &&
         s.quotient_orientable == c.quotient_orientable && s.quotient_genus == c.quotient_genus;
}

}  // namespace mcg

#include "mcg/closure.hpp"

#include "mcg/error.hpp"

namespace mcg {

namespace {

void require_genus(int genus, int minimum) {
  if (genus < minimum)
    throw Error(Errc::genus_too_small, "g = " + std::to_string(genus) + " < " + std::to_string(minimum));
}

// Clause deciding containment of the commutator subgroup, or nullopt when no clause applies.
std::optional<std::string> involution_clause(const InvolutionClass& c) {
  const int g = c.genus, r = c.isolated_points, k = c.ovals, km = c.one_sided_ovals;
  if (r > 0 && k == 0) {
    if (g - r >= 4) return "isolated points only, g-r>=4";
  } else if (k > 0 && r + km > 0) {
    if (!c.quotient_orientable) return "ovals with r+k->0, non-orientable quotient";
    if (g - r - 2 * k >= 2) return "ovals with r+k->0, orientable quotient, g-r-2k>=2";
  } else if (r == 0 && km == 0) {
    if (!c.fixed_set_separating) return "non-separating fixed set";
    if (g - 2 * k >= 4) return "separating fixed set, g-2k>=4";
  }
  return std::nullopt;
}

}  // namespace

std::string_view closure_code(ClosureId id) {
  switch (id) {
    case ClosureId::twist_subgroup: return "T";
    case ClosureId::full_group: return "M";
    default: return "unknown";
  }
}

ClosureVerdict decide_order_gt2(int genus, int order, bool twist_member) {
  require_genus(genus, 5);
  if (order < 3) throw Error(Errc::invalid_parameters, "order must be at least 3");
  ClosureVerdict v;
  v.contains_commutator = true;
  v.clause = "order>2";
  if (genus >= 7) v.closure_id = twist_member ? ClosureId::twist_subgroup : ClosureId::full_group;
  return v;
}

bool decide_involution(const InvolutionClass& c) {
  require_genus(c.genus, 5);
  if (!satisfies_invariants(c)) throw Error(Errc::invalid_parameters, to_string(c));
  return involution_clause(c).has_value();
}

int real_determinant(const InvolutionClass& c) {
  return ((c.genus + c.isolated_points - 2) / 2) % 2 == 0 ? 1 : -1;
}

ClosureVerdict involution_verdict(const InvolutionClass& c) {
  ClosureVerdict v;
  v.contains_commutator = decide_involution(c);
  if (v.contains_commutator) {
    v.clause = *involution_clause(c);
    if (c.genus >= 7)
      v.closure_id = real_determinant(c) == 1 ? ClosureId::twist_subgroup : ClosureId::full_group;
    if (c.genus == 6 && c.isolated_points == 0 && c.ovals == 0)
      v.warning = "free involution at g=6 counted as non-separating";
  } else {
    v.clause = "none";
    v.closure_id = ClosureId::proper_other;
  }
  return v;
}

bool is_normal_generator(const InvolutionClass& c) {
  require_genus(c.genus, 7);
  return decide_involution(c) && real_determinant(c) == -1;
}

bool is_normal_generator(int genus, int order, int determinant) {
  require_genus(genus, 7);
  if (order < 3) throw Error(Errc::invalid_parameters, "an involution needs its class");
  if (determinant != 1 && determinant != -1) throw Error(Errc::not_unimodular, "det = " + std::to_string(determinant));
  return decide_order_gt2(genus, order, determinant == 1).closure_id == ClosureId::full_group;
}

InvolutionClass normal_generator_witness(int genus) {
  require_genus(genus, 7);
  for (int h = 1; 2 * h <= genus; h += 2)
    for (int r = 0; r <= genus; ++r) {
      const int twice_km = genus - 2 * h + 2 - r;
      if (twice_km < 2 || twice_km % 2 != 0) continue;
      InvolutionClass c{Family::F4, genus, h, r, twice_km / 2, 0, twice_km / 2, false, false};
      if (satisfies_invariants(c) && is_normal_generator(c)) return c;
    }
  throw Error(Errc::not_applicable, "no witness for g = " + std::to_string(genus));
}

}  // namespace mcg

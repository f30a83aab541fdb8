#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcg/nec.hpp"

namespace mcg {

enum class Family { F01, F02, F1, F2, F3, F4, F5, F6, F7, F8, F9 };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/// Conjugacy class of an involution of N_g, described by its fixed-point data.
struct InvolutionClass {
  Family family = Family::F1;
  int genus = 0;
  int quotient_genus = 0;
  int isolated_points = 0;
  int ovals = 0;
  int two_sided_ovals = 0;
  int one_sided_ovals = 0;
  bool quotient_orientable = false;
  bool fixed_set_separating = false;

  friend bool operator==(const InvolutionClass&, const InvolutionClass&) = default;
  friend auto operator<=>(const InvolutionClass&, const InvolutionClass&) = default;
};

/// "F4[g=9,h=1,r=1,k=2,k+=1,k-=1,Q=nonor,sep=false]"
std::string to_string(const InvolutionClass& c);
InvolutionClass parse_involution_class(std::string_view text);

bool satisfies_invariants(const InvolutionClass& c);

/// Every conjugacy class of involutions of N_g, ordered by family then parameters.
std::vector<InvolutionClass> enumerate_classes(int genus);

/// Builds a class from (family, g, h, r, k+, k-) and checks it.
InvolutionClass make_class(Family family, int genus, int quotient_genus, int isolated_points,
                           int two_sided_ovals, int one_sided_ovals);

NecSignature signature_of(const InvolutionClass& c);

/// Class of the Z2 action defined by an admissible epimorphism onto Z2.
InvolutionClass involution_class_of(const NecSignature& sig, const Epimorphism& theta);

// Surgery calculus

enum class BaseKind {
  reflection,         // mirror of an orientable surface, every handle crossing the mirror
  rotation,           // rotation by pi with 2m+2 fixed points
  free_rotation,      // rotation by pi about an axis through the central hole of a torus
  sphere_antipodism,
  torus_antipodism,   // (x, y) -> (x + 1/2, -y)
};

struct BaseAction {
  BaseKind kind = BaseKind::reflection;
  int genus = 0;  // handles meeting the axis or mirror; 1 for the torus bases, 0 for the sphere
  int conjugate_pairs = 0;

  friend bool operator==(const BaseAction&, const BaseAction&) = default;
};

struct SurgeryState {
  bool surface_orientable = true;
  int genus = 0;  // orientable genus when orientable, otherwise the number of crosscaps
  bool preserves_orientation = false;
  int isolated_points = 0;
  int two_sided_ovals = 0;
  int one_sided_ovals = 0;
  bool quotient_orientable = true;
  int quotient_genus = 0;

  int ovals() const { return two_sided_ovals + one_sided_ovals; }
  /// 2 - Euler characteristic.
  int euler_genus() const { return surface_orientable ? 2 * genus : genus; }
  bool hurwitz_riemann_holds() const;

  friend bool operator==(const SurgeryState&, const SurgeryState&) = default;
};

enum class SurgeryKind { blow_up_isolated, blow_up_non_isolated, blow_up_two_orbit, add_handle, glue_surfaces };
enum class OvalSide { two_sided, one_sided };

struct SurgeryStep {
  SurgeryKind kind = SurgeryKind::blow_up_two_orbit;
  OvalSide oval = OvalSide::two_sided;  // blow_up_non_isolated: side of the oval before the step
  BaseAction factor{BaseKind::rotation, 0, 0};  // glue_surfaces: the rotated factor

  friend bool operator==(const SurgeryStep&, const SurgeryStep&) = default;
};

std::string to_string(const SurgeryStep& step);

SurgeryState base_state(const BaseAction& base);
SurgeryState apply_surgery(const SurgeryState& state, const SurgeryStep& step);

struct ModelRecipe {
  BaseAction base;
  std::vector<SurgeryStep> steps;
};

ModelRecipe model_recipe(const InvolutionClass& c);
SurgeryState replay(const ModelRecipe& recipe);
bool reproduces(const SurgeryState& state, const InvolutionClass& c);

}  // namespace mcg

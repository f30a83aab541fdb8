#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcg/involutions.hpp"
#include "mcg/z2.hpp"

namespace mcg {

/// Basis [a_1],[b_1],...,[a_h],[b_h],[c_1],...,[c_k] of H_1(N_g; Z2).
struct Layout {
  int handles = 0;
  int crosscaps = 0;

  int genus() const { return 2 * handles + crosscaps; }
  Eigen::Index a(int i) const { return 2 * (i - 1); }
  Eigen::Index b(int i) const { return 2 * (i - 1) + 1; }
  Eigen::Index c(int j) const { return 2 * handles + (j - 1); }

  friend bool operator==(const Layout&, const Layout&) = default;
};

Z2Matrix intersection_form(const Layout& layout);

/// Sum of the crosscap classes; the unique v with <v, x> = <x, x> for all x.
Z2Vector characteristic_class(const Layout& layout);

struct VgPlusBasis {
  std::vector<Z2Vector> basis;   // g - 1 vectors spanning V_g^+
  std::optional<Z2Vector> c;     // [c] when it lies in V_g^+, i.e. k' even
};

VgPlusBasis vg_plus_basis(int genus, const Layout& layout);

struct InducedAction {
  Layout layout;
  Z2Matrix matrix;  // column j is the image of basis vector j
};

/// Action of the model involution of the class on H_1(N_g; Z2).
InducedAction induced_z2_action(const InvolutionClass& c);

/// Throws UnsupportedModel unless M^2 = I, M preserves the form and fixes [c].
void check_structure(const Z2Matrix& m, const Layout& layout);

struct TrivialityProfile {
  bool on_vg = false;
  bool on_vg_plus = false;
  std::optional<bool> on_quotient_opt;  // V_g^+ / <[c]>, defined for k' even

  /// Throws QuotientUndefined when k' is odd.
  bool on_quotient() const;
  bool any() const { return on_vg || on_vg_plus || on_quotient_opt.value_or(false); }

  friend bool operator==(const TrivialityProfile&, const TrivialityProfile&) = default;
};

TrivialityProfile triviality_profile(const Z2Matrix& m, const Layout& layout);

struct DeterminantVerdict {
  int determinant = 1;
  bool twist_member = true;
};

/// Throws NotUnimodular when |det| != 1.
DeterminantVerdict determinant_hom(const IntegerMatrix& m);

/// Action on H_1(N_g; R) of the involution with k+ = 0 used for normal generation,
/// on the basis a_1..a_l, b_1..b_l, c_1..c_{2h-1}, d_1..d_{k-} with l = (k- + r - 2)/2.
IntegerMatrix f4_variant_real_action(int genus, int quotient_genus, int isolated_points, int one_sided_ovals);

/// Rotation of order g (g even) or g - 1 (g odd) permuting crosscaps, on the basis
/// mu_i - mu_last of the hyperplane sum(mu_i) = 0.
IntegerMatrix rotation_generator_action(int genus);

/// Multiplicative order of an integer matrix, up to the given bound; 0 if larger.
int matrix_order(const IntegerMatrix& m, int bound);

/// "layout h'=..,k'=.." followed by one bit-string row per matrix row.
std::string export_bits(const Z2Matrix& m, const Layout& layout);
std::string export_csv(const IntegerMatrix& m);

}  // namespace mcg

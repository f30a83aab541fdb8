#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcg/involutions.hpp"

namespace mcg {

enum class ClosureId { twist_subgroup, full_group, proper_other, unknown };

/// "T", "M" or "unknown".
std::string_view closure_code(ClosureId id);

struct ClosureVerdict {
  bool contains_commutator = false;
  ClosureId closure_id = ClosureId::unknown;
  std::string clause;                  // which condition decided the verdict
  std::optional<std::string> warning;
};

/// Normal closure of a periodic map of order >= 3.
ClosureVerdict decide_order_gt2(int genus, int order, bool twist_member);

/// Whether the normal closure of an involution in the class contains the commutator subgroup.
bool decide_involution(const InvolutionClass& c);

/// Full verdict for an involution; the closure is identified through real_determinant.
ClosureVerdict involution_verdict(const InvolutionClass& c);

/// det of the action on H_1(N_g; R): (-1)^m where the -1 eigenspace has dimension
/// m = (g + r - 2) / 2, from the Lefschetz number r of the involution.
int real_determinant(const InvolutionClass& c);

bool is_normal_generator(const InvolutionClass& c);
bool is_normal_generator(int genus, int order, int determinant);

/// An involution with k+ = 0 and odd quotient genus normally generating M(N_g).
InvolutionClass normal_generator_witness(int genus);

}  // namespace mcg

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mcg/nec.hpp"

namespace mcg {

struct SuiteReport {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Every admissible (signature, epimorphism) with the given orders assembles to N_g.
SuiteReport verify_hurwitz_riemann(int genus_min, int genus_max, const std::vector<int>& orders,
                                   std::uint64_t budget = default_enumeration_budget);

/// Structural checks on the model actions, the worked examples at g = 6, 8, 10, the
/// determinant of the k+ = 0 variant, the rotation generators and the witnesses.
SuiteReport verify_homology(int genus_min, int genus_max);

/// Conjugacy invariants are stable under the automorphisms, and invariant bucketing of
/// Z2 epimorphisms reproduces the taxonomy.
SuiteReport verify_conjugacy(int genus_min, int genus_max, std::uint64_t budget = default_enumeration_budget);

/// decide_involution agrees with non-triviality of the model action on all three spaces.
SuiteReport verify_dichotomy(int genus_min, int genus_max);

SuiteReport verify_fixture_dir(const std::filesystem::path& dir);

}  // namespace mcg

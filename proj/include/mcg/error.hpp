#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcg {

enum class Errc {
  invalid_signature,
  parse_error,
  non_integral_genus,
  not_a_surface,
  signature_mismatch,
  search_space_too_large,
  unsupported_family,
  automorphism_not_applicable,
  genus_too_small,
  not_applicable,
  unsupported_model,
  quotient_undefined,
  not_unimodular,
  invalid_parameters,
  malformed_symbol,
  not_admissible,
  generator_not_primitive,
  degenerate_curve,
  not_in_general_position,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mcg

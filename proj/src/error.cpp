#include "mcg/error.hpp"

namespace mcg {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_signature: return "InvalidSignature";
    case Errc::parse_error: return "ParseError";
    case Errc::non_integral_genus: return "NonIntegralGenus";
    case Errc::not_a_surface: return "NotASurface";
    case Errc::signature_mismatch: return "SignatureMismatch";
    case Errc::search_space_too_large: return "SearchSpaceTooLarge";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::automorphism_not_applicable: return "AutomorphismNotApplicable";
    case Errc::genus_too_small: return "GenusTooSmall";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::unsupported_model: return "UnsupportedModel";
    case Errc::quotient_undefined: return "QuotientUndefined";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::malformed_symbol: return "MalformedSymbol";
    case Errc::not_admissible: return "NotAdmissible";
    case Errc::generator_not_primitive: return "GeneratorNotPrimitive";
    case Errc::degenerate_curve: return "DegenerateCurve";
    case Errc::not_in_general_position: return "NotInGeneralPosition";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace mcg

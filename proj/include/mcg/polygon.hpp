#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/nec.hpp"

namespace mcg {

enum class EdgeKind {
  plain,     // a
  primed,    // a'  paired with a, reversing direction
  starred,   // a*  paired with a, keeping direction
  boundary,  // a label occurring once: a reflection axis
};

struct EdgeToken {
  std::string label;
  EdgeKind kind = EdgeKind::plain;
  friend bool operator==(const EdgeToken&, const EdgeToken&) = default;
};

/// Cyclic word of edge tokens, e.g. "x1 x1' a1 a1*".
struct SurfaceSymbol {
  std::vector<EdgeToken> tokens;
  friend bool operator==(const SurfaceSymbol&, const SurfaceSymbol&) = default;
};

std::string to_string(const SurfaceSymbol& sym);
SurfaceSymbol parse_symbol(std::string_view text);

/// Polygon word of the quotient orbifold: x/e/g/a/b stand for the edges paired by
/// x_i, e_j, the axes of c_j, and a_l, b_l (or d_l for sign '-').
SurfaceSymbol surface_symbol(const NecSignature& sig);

struct Classification {
  bool orientable = false;
  int genus = 0;
  int euler_characteristic = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify_symbol(const SurfaceSymbol& sym);

struct BoundaryItem {
  int copy = 0;
  int edge = 0;
  friend auto operator<=>(const BoundaryItem&, const BoundaryItem&) = default;
};

struct EdgePairing {
  BoundaryItem first;
  BoundaryItem second;
  bool flip = false;  // true: t -> t; false: t -> 1 - t
};

/// n copies of one polygon with their edges identified in pairs.
struct GluedSurface {
  int copies = 1;
  SurfaceSymbol symbol;
  std::vector<EdgePairing> pairings;

  int edges_per_copy() const { return static_cast<int>(symbol.tokens.size()); }
  /// Index into pairings of the pairing containing the item.
  int pairing_of(const BoundaryItem& item) const;
  BoundaryItem partner(const BoundaryItem& item) const;
  bool flip(const BoundaryItem& item) const;
};

Classification classify(const GluedSurface& surface);

/// D = P u yP u ... u y^{n-1}P for the deck generator y with theta(y) = y_image.
/// Copy i of the result is y^i P.
GluedSurface assemble_fundamental_domain(const NecSignature& sig, const Epimorphism& theta, int y_image);
GluedSurface assemble_fundamental_domain(const NecSignature& sig, const Epimorphism& theta,
                                         const std::string& y_generator);

/// Exact position in (0, 1) along an edge, measured in the direction of the word.
struct EdgePosition {
  int edge = 0;
  std::int64_t num = 1;
  std::int64_t den = 2;

  friend bool operator==(const EdgePosition& x, const EdgePosition& y) {
    return x.edge == y.edge && x.num * y.den == y.num * x.den;
  }
};

struct Chord {
  int copy = 0;
  EdgePosition in;
  EdgePosition out;
};

/// Closed curve: chord k leaves through a point identified with where chord k+1 enters.
struct CurveDiagram {
  std::vector<Chord> chords;
};

/// Throws InvalidParameters when the chords do not close up on the glued surface.
void validate_curve(const CurveDiagram& curve, const GluedSurface& glued);

CurveDiagram deck_image(const CurveDiagram& curve, const GluedSurface& glued);

struct CurveProperties {
  bool simple = false;
  bool two_sided = false;
};

CurveProperties curve_properties(const CurveDiagram& curve, const GluedSurface& glued);

int intersection_count(const CurveDiagram& first, const CurveDiagram& second, const GluedSurface& glued);

struct ComplementProfile {
  bool connected = false;
  bool non_orientable = false;
  friend bool operator==(const ComplementProfile&, const ComplementProfile&) = default;
};

ComplementProfile complement_profile(const std::vector<CurveDiagram>& curves, const GluedSurface& glued);

enum class PairType { type1, type2, none };

std::string_view to_string(PairType type);
PairType parse_pair_type(std::string_view text);

PairType is_standard_pair(const CurveDiagram& c, const CurveDiagram& d, const GluedSurface& glued);

}  // namespace mcg

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mcg {

enum class Sign { plus, minus };

/// Signature (h; +/-; [m_1..m_r]; {()^k}) of an NEC group with empty period cycles.
struct NecSignature {
  int quotient_genus = 0;
  Sign sign = Sign::minus;
  std::vector<int> periods;  // sorted, each >= 2
  int cycles = 0;

  /// Validates and stores periods in non-decreasing order.
  static NecSignature make(int quotient_genus, Sign sign, std::vector<int> periods, int cycles);

  int period_count() const { return static_cast<int>(periods.size()); }
  bool has_reversing_generator() const { return sign == Sign::minus || cycles > 0; }

  friend bool operator==(const NecSignature&, const NecSignature&) = default;
  friend auto operator<=>(const NecSignature&, const NecSignature&) = default;
};

std::string to_string(const NecSignature& sig);
NecSignature parse_signature(std::string_view text);

enum class GeneratorKind { elliptic, reflection, connector, handle_a, handle_b, glide };

bool orientation_reversing(GeneratorKind kind);

struct Generator {
  std::string name;  // "x1", "c2", "e1", "a1", "b1", "d3"
  GeneratorKind kind;
  int index;  // 1-based within its kind
};

struct Letter {
  std::size_t generator;  // position in Presentation::generators
  int exponent;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Letter> long_relation;

  std::optional<std::size_t> find(std::string_view name) const;
};

Presentation presentation(const NecSignature& sig);

/// Images in Z_n of the presentation generators.
struct Epimorphism {
  int order = 0;
  std::map<std::string, int> images;

  int image(const std::string& name) const;
  friend bool operator==(const Epimorphism&, const Epimorphism&) = default;
};

/// Genus of the non-orientable surface covering the orbifold with an n-fold cyclic action.
int hurwitz_riemann_genus(const NecSignature& sig, int order);

/// Relation compliance and surjectivity of the images.
bool satisfies_relations(const NecSignature& sig, const Epimorphism& theta);

bool is_admissible(const NecSignature& sig, const Epimorphism& theta);

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 24;

/// All admissible epimorphisms in lexicographic order of their image tuples.
/// The budget bounds the number of candidate tuples examined.
std::vector<Epimorphism> enumerate_epimorphisms(const NecSignature& sig, int order,
                                                std::uint64_t budget = default_enumeration_budget);

/// Signatures with a reversing generator whose n-fold covers have genus g.
std::vector<NecSignature> enumerate_signatures(int genus, int order);

struct OddPrimeInvariant {
  std::vector<int> canonical;
  friend bool operator==(const OddPrimeInvariant&, const OddPrimeInvariant&) = default;
  friend auto operator<=>(const OddPrimeInvariant&, const OddPrimeInvariant&) = default;
};

struct Order2Invariant {
  int one_sided_ovals = 0;
  std::optional<int> glide_sum;
  std::optional<bool> glides_all_zero;
  friend bool operator==(const Order2Invariant&, const Order2Invariant&) = default;
  friend auto operator<=>(const Order2Invariant&, const Order2Invariant&) = default;
};

using ConjugacyInvariants = std::variant<OddPrimeInvariant, Order2Invariant>;

ConjugacyInvariants conjugacy_invariants(const NecSignature& sig, const Epimorphism& theta);
bool are_conjugate(const NecSignature& sig, const Epimorphism& first, const Epimorphism& second);

enum class AutomorphismKind {
  elliptic_into_handle,   // b1 picks up the last elliptic generator
  connector_into_handle,  // b1 picks up the last connector
  handle_shear,           // b1 picks up a1
  elliptic_into_glide,    // d1 picks up the last elliptic generator, which is inverted
  connector_into_glide,   // d1 picks up the last connector, which is inverted
  swap_elliptic,
  swap_connector,
};

struct Automorphism {
  AutomorphismKind kind;
  int index = 0;  // 1-based position for the swaps
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

std::string to_string(const Automorphism& aut);

bool is_applicable(const NecSignature& sig, const Automorphism& aut);
std::vector<Automorphism> applicable_automorphisms(const NecSignature& sig);

/// theta composed with the automorphism, computed in the abelian target.
Epimorphism apply_automorphism(const NecSignature& sig, const Epimorphism& theta,
                               const Automorphism& aut);

}  // namespace mcg

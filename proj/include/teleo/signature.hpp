#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "teleo/error.hpp"

namespace teleo {

/// An object symbol, possibly starred. x** = x holds structurally: the star
/// is a flag, so dualising twice returns the identical value.
struct SignedObject {
  std::string symbol;
  bool starred = false;

  SignedObject dual() const { return {symbol, !starred}; }
  std::string to_string() const { return starred ? symbol + "*" : symbol; }

  friend auto operator<=>(const SignedObject&, const SignedObject&) = default;
  friend bool operator==(const SignedObject&, const SignedObject&) = default;
};

/// Parses "x" or "x*". Throws invalid_name.
SignedObject parse_signed_object(std::string_view text);

/// Empty word is the monoidal unit I.
using Word = std::vector<SignedObject>;

/// Letterwise star flip. Letter order is kept (no reversal).
Word word_dual(const Word& w);
Word concat(const Word& a, const Word& b);
std::string to_string(const Word& w);

struct MorphismDecl {
  std::string name;
  Word dom;
  Word cod;
  bool dualisable = false;

  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct TeleologicalSignature {
  std::set<std::string> objects;
  std::vector<MorphismDecl> morphisms;

  const MorphismDecl* find(std::string_view name) const;
};

/// Kinds of morphism symbol in the expanded signature.
enum class SymbolKind { generator, dual_generator, counit };

struct MonoidalMorphism {
  std::string name;    // M(Σ) label: "f", "f*" or "ε_x"
  std::string symbol;  // underlying symbol: f for f and f*, x for ε_x
  SymbolKind kind = SymbolKind::generator;
  bool dualisable = false;  // whether the underlying generator is dualisable
  Word dom;
  Word cod;
};

struct MonoidalSignature {
  std::set<std::string> objects;  // "x" and "x*" for each object symbol x
  std::vector<MonoidalMorphism> morphisms;

  const MonoidalMorphism* find(std::string_view name) const;
};

std::string dual_label(std::string_view generator);
std::string counit_label(std::string_view object);

ValidationReport validate_signature(const TeleologicalSignature& s);

/// Throws the first issue of validate_signature as an Error.
void require_valid(const TeleologicalSignature& s);

MonoidalSignature expand_signature(const TeleologicalSignature& s);

bool is_identifier(std::string_view name);

}  // namespace teleo

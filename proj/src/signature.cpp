#include "teleo/signature.hpp"

#include <algorithm>
#include <cctype>

namespace teleo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_name: return "duplicate-name";
    case ErrorCode::undeclared_object: return "undeclared-object";
    case ErrorCode::invalid_name: return "invalid-name";
    case ErrorCode::syntax_error: return "syntax-error";
    case ErrorCode::type_mismatch: return "type-mismatch";
    case ErrorCode::not_dualisable: return "not-dualisable";
    case ErrorCode::unknown_symbol: return "unknown-symbol";
    case ErrorCode::boundary_mismatch: return "boundary-mismatch";
    case ErrorCode::not_an_adaptor: return "not-an-adaptor";
    case ErrorCode::not_a_scalar: return "not-a-scalar";
    case ErrorCode::invalid_partition: return "invalid-partition";
    case ErrorCode::infeasible_subset: return "infeasible-subset";
    case ErrorCode::unmapped_symbol: return "unmapped-symbol";
    case ErrorCode::dual_undefined: return "dual-undefined";
    case ErrorCode::invalid_graph: return "invalid-graph";
    case ErrorCode::invalid_input: return "invalid-input";
  }
  return "unknown-error";
}

SignedObject parse_signed_object(std::string_view text) {
  bool starred = !text.empty() && text.back() == '*';
  auto symbol = starred ? text.substr(0, text.size() - 1) : text;
  if (!is_identifier(symbol)) {
    throw Error(ErrorCode::invalid_name, "'" + std::string(text) + "' is not an object letter");
  }
  return {std::string(symbol), starred};
}

Word word_dual(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& letter : w) out.push_back(letter.dual());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ⊗ ";
    out += w[i].to_string();
  }
  return out;
}

const MorphismDecl* TeleologicalSignature::find(std::string_view name) const {
  auto it = std::find_if(morphisms.begin(), morphisms.end(),
                         [&](const MorphismDecl& m) { return m.name == name; });
  return it == morphisms.end() ? nullptr : &*it;
}

const MonoidalMorphism* MonoidalSignature::find(std::string_view name) const {
  auto it = std::find_if(morphisms.begin(), morphisms.end(),
                         [&](const MonoidalMorphism& m) { return m.name == name; });
  return it == morphisms.end() ? nullptr : &*it;
}

std::string dual_label(std::string_view generator) { return std::string(generator) + "*"; }
std::string counit_label(std::string_view object) { return "ε_" + std::string(object); }

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_' || u == '\'';
  });
}

ValidationReport validate_signature(const TeleologicalSignature& s) {
  ValidationReport report;
  for (const auto& x : s.objects) {
    if (!is_identifier(x)) report.add(ErrorCode::invalid_name, x, "object symbol is not an identifier");
  }
  std::set<std::string> seen;
  for (const auto& m : s.morphisms) {
    if (!is_identifier(m.name)) {
      report.add(ErrorCode::invalid_name, m.name, "morphism symbol is not an identifier");
    }
    if (!seen.insert(m.name).second) {
      report.add(ErrorCode::duplicate_name, m.name, "morphism '" + m.name + "' declared twice");
    }
    for (const Word* w : {&m.dom, &m.cod}) {
      for (const auto& letter : *w) {
        if (!s.objects.contains(letter.symbol)) {
          report.add(ErrorCode::undeclared_object, letter.symbol,
                     "object '" + letter.symbol + "' used by '" + m.name + "' is not declared");
        }
      }
    }
  }
  return report;
}

void require_valid(const TeleologicalSignature& s) {
  auto report = validate_signature(s);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    throw Error(first.code, first.message);
  }
}

MonoidalSignature expand_signature(const TeleologicalSignature& s) {
  MonoidalSignature out;
  for (const auto& x : s.objects) {
    out.objects.insert(x);
    out.objects.insert(x + "*");
  }
  for (const auto& m : s.morphisms) {
    out.morphisms.push_back({m.name, m.name, SymbolKind::generator, m.dualisable, m.dom, m.cod});
  }
  for (const auto& m : s.morphisms) {
    if (!m.dualisable) continue;
    out.morphisms.push_back({dual_label(m.name), m.name, SymbolKind::dual_generator, true,
                             word_dual(m.cod), word_dual(m.dom)});
  }
  for (const auto& x : s.objects) {
    out.morphisms.push_back({counit_label(x), x, SymbolKind::counit, false,
                             Word{{x, false}, {x, true}}, Word{}});
  }
  return out;
}

}  // namespace teleo

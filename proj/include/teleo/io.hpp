#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "teleo/evaluate.hpp"
#include "teleo/nash.hpp"

namespace teleo {

using Json = nlohmann::json;

/// Reads a whole file; throws invalid_input when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Parses JSON; throws invalid_input with the parser's message.
Json parse_json(const std::string& text, const std::string& origin);
Json load_json(const std::filesystem::path& path);

/// {"objects": [...], "morphisms": [{"name", "dom", "cod", "dualisable"}]}
TeleologicalSignature signature_from_json(const Json& j);
Json signature_to_json(const TeleologicalSignature& s);

/// Valuation files: named carrier sets, object values and morphism values.
///   "sets":    {"A": ["a0", "a1"], ...}
///   "objects": lens/game {"x": {"forward": SET, "backward": SET}}, rel {"x": SET}
///   where SET is a set name, "1" for the unit, or a list of names (product).
/// Morphism values are typed by the signature's declared words.
///   lens: {"view": {x: y}, "update": {"(x,r)": s}} or
///         {"adaptor": {"forward": {x: y}, "backward": {r: s}}}
///   rel:  {"matrix": [[0, 1], ...]} or {"pairs": [[a, b], ...]}
///   game: {"kind": "decision"} | {"kind": "computation", "function": {a: b}}
///         | {"kind": "lens", "view": ..., "update": ...}
Valuation<LensCategory> lens_valuation_from_json(const Json& j, const TeleologicalSignature& s);
Valuation<RelCategory> rel_valuation_from_json(const Json& j, const TeleologicalSignature& s);
Valuation<GameCategory> game_valuation_from_json(const Json& j, const TeleologicalSignature& s);

/// Game fixture: {"name", "X": [...], "Y": [...], "payoffs": [[["u1","u2"], ...], ...],
/// "variants": ["a", "b", "c"], "partition": [[...], ...]}
struct GameFixture {
  std::string name;
  std::vector<Fig1Variant> variants;
  Fig1Spec spec;
};

GameFixture fixture_from_json(const Json& j);

Json to_json(const FinSet& s);
Json to_json(const LensObject& o);
Json to_json(const FinLens& l);
Json to_json(const FinRel& r);
Json to_json(const FinGame& g);
Json to_json(const ScalarGame& s);

std::string render_text(const FinLens& l);
std::string render_text(const FinRel& r);
std::string render_text(const FinGame& g);

}  // namespace teleo

#include "teleo/io.hpp"

#include <fstream>
#include <sstream>

namespace teleo {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_input, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get<std::string>();
}

Word word_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected a list of letters");
  Word w;
  for (const auto& l : j) w.push_back(parse_signed_object(as_string(l, where)));
  return w;
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back(l.to_string());
  return out;
}

std::map<std::string, FinSet> sets_from_json(const Json& j) {
  std::map<std::string, FinSet> out;
  if (!j.contains("sets")) return out;
  const auto& sets = j.at("sets");
  if (!sets.is_object()) bad("\"sets\" must be an object");
  for (const auto& [name, elements] : sets.items()) {
    if (name == "1") bad("set name \"1\" is reserved for the unit");
    if (!elements.is_array()) bad("set '" + name + "' must list its elements");
    std::vector<std::string> names;
    for (const auto& e : elements) names.push_back(as_string(e, "set '" + name + "'"));
    out.emplace(name, make_set(name, names));
  }
  return out;
}

FinSet set_ref(const Json& j, const std::map<std::string, FinSet>& sets, const std::string& where) {
  auto one = [&](const Json& r) {
    auto name = as_string(r, where);
    if (name == "1") return unit_set();
    auto it = sets.find(name);
    if (it == sets.end()) bad(where + ": unknown set '" + name + "'");
    return it->second;
  };
  if (j.is_array()) {
    FinSet out = unit_set();
    for (const auto& r : j) out = product(out, one(r));
    return out;
  }
  return one(j);
}

std::size_t element(const FinSet& s, const Json& j, const std::string& where) {
  auto name = as_string(j, where);
  auto i = s.index_of(name);
  if (!i) bad(where + ": '" + name + "' is not an element of " + s.name());
  return *i;
}

std::vector<std::size_t> table_from_json(const Json& j, const FinSet& dom, const FinSet& cod,
                                         const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object mapping elements");
  std::vector<std::size_t> out(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto key = dom.element_name(i);
    if (!j.contains(key)) bad(where + ": no entry for '" + key + "'");
    out[i] = element(cod, j.at(key), where);
  }
  if (j.size() != dom.size()) bad(where + ": entries outside " + dom.name());
  return out;
}

// update tables accept flat "(x,r)" keys or nested {x: {r: s}}
std::vector<std::size_t> update_from_json(const Json& j, const FinSet& x, const FinSet& r,
                                          const FinSet& s, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  std::vector<std::size_t> out(x.size() * r.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto xn = x.element_name(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      auto rn = r.element_name(k);
      auto flat = "(" + xn + "," + rn + ")";
      if (j.contains(flat)) {
        out[i * r.size() + k] = element(s, j.at(flat), where);
      } else if (j.contains(xn) && j.at(xn).is_object() && j.at(xn).contains(rn)) {
        out[i * r.size() + k] = element(s, j.at(xn).at(rn), where);
      } else {
        bad(where + ": no update entry for '" + flat + "'");
      }
    }
  }
  return out;
}

FinLens lens_from_json(const Json& j, const LensObject& dom, const LensObject& cod,
                       const std::string& where) {
  if (j.contains("adaptor")) {
    const auto& a = j.at("adaptor");
    auto f = table_from_json(field(a, "forward", where), dom.forward, cod.forward, where + " forward");
    auto g = table_from_json(field(a, "backward", where), cod.backward, dom.backward,
                             where + " backward");
    return adaptor({dom.forward, cod.forward, f}, {cod.backward, dom.backward, g});
  }
  auto view = table_from_json(field(j, "view", where), dom.forward, cod.forward, where + " view");
  auto update = update_from_json(field(j, "update", where), dom.forward, cod.backward,
                                 dom.backward, where + " update");
  return make_lens(dom, cod, view, update);
}

template <class C>
void lens_objects(const Json& j, const TeleologicalSignature& s, Valuation<C>& val,
                  const std::map<std::string, FinSet>& sets) {
  const auto& objects = field(j, "objects", "valuation");
  for (const auto& x : s.objects) {
    if (!objects.contains(x)) continue;
    const auto& o = objects.at(x);
    auto where = "object '" + x + "'";
    val.objects[x] = {set_ref(field(o, "forward", where), sets, where),
                      set_ref(field(o, "backward", where), sets, where)};
  }
}

const Json& morphisms_of(const Json& j) {
  static const Json empty = Json::object();
  if (!j.contains("morphisms")) return empty;
  if (!j.at("morphisms").is_object()) bad("\"morphisms\" must be an object");
  return j.at("morphisms");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(origin + ": " + e.what());
  }
}

Json load_json(const std::filesystem::path& path) { return parse_json(read_file(path), path.string()); }

TeleologicalSignature signature_from_json(const Json& j) {
  TeleologicalSignature s;
  for (const auto& o : field(j, "objects", "signature")) s.objects.insert(as_string(o, "objects"));
  for (const auto& m : field(j, "morphisms", "signature")) {
    MorphismDecl d;
    d.name = as_string(field(m, "name", "morphism"), "morphism name");
    auto where = "morphism '" + d.name + "'";
    d.dom = word_from_json(field(m, "dom", where), where);
    d.cod = word_from_json(field(m, "cod", where), where);
    if (m.contains("dualisable")) {
      if (!m.at("dualisable").is_boolean()) bad(where + ": \"dualisable\" must be a boolean");
      d.dualisable = m.at("dualisable").get<bool>();
    }
    s.morphisms.push_back(std::move(d));
  }
  return s;
}

Json signature_to_json(const TeleologicalSignature& s) {
  Json out{{"objects", Json::array()}, {"morphisms", Json::array()}};
  for (const auto& x : s.objects) out["objects"].push_back(x);
  for (const auto& m : s.morphisms) {
    out["morphisms"].push_back({{"name", m.name},
                                {"dom", word_to_json(m.dom)},
                                {"cod", word_to_json(m.cod)},
                                {"dualisable", m.dualisable}});
  }
  return out;
}

Valuation<LensCategory> lens_valuation_from_json(const Json& j, const TeleologicalSignature& s) {
  Valuation<LensCategory> val;
  auto sets = sets_from_json(j);
  lens_objects(j, s, val, sets);
  const auto& morphisms = morphisms_of(j);
  for (const auto& m : s.morphisms) {
    if (!morphisms.contains(m.name)) continue;
    auto dom = eval_word<LensCategory>(m.dom, val), cod = eval_word<LensCategory>(m.cod, val);
    val.morphisms[m.name] = lens_from_json(morphisms.at(m.name), dom, cod, "morphism '" + m.name + "'");
  }
  return val;
}

Valuation<RelCategory> rel_valuation_from_json(const Json& j, const TeleologicalSignature& s) {
  Valuation<RelCategory> val;
  auto sets = sets_from_json(j);
  const auto& objects = field(j, "objects", "valuation");
  for (const auto& x : s.objects) {
    if (objects.contains(x)) val.objects[x] = set_ref(objects.at(x), sets, "object '" + x + "'");
  }
  const auto& morphisms = morphisms_of(j);
  for (const auto& m : s.morphisms) {
    if (!morphisms.contains(m.name)) continue;
    auto where = "morphism '" + m.name + "'";
    const auto& r = morphisms.at(m.name);
    auto dom = eval_word<RelCategory>(m.dom, val), cod = eval_word<RelCategory>(m.cod, val);
    std::vector<char> matrix(dom.size() * cod.size(), 0);
    if (r.contains("matrix")) {
      const auto& rows = r.at("matrix");
      if (!rows.is_array() || rows.size() != dom.size()) bad(where + ": matrix needs one row per element");
      for (std::size_t a = 0; a < dom.size(); ++a) {
        if (!rows[a].is_array() || rows[a].size() != cod.size()) bad(where + ": matrix row has wrong length");
        for (std::size_t b = 0; b < cod.size(); ++b) {
          const auto& v = rows[a][b];
          if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
            bad(where + ": matrix entries must be 0 or 1");
          }
          matrix[a * cod.size() + b] = static_cast<char>(v.get<int>());
        }
      }
    } else {
      for (const auto& pr : field(r, "pairs", where)) {
        if (!pr.is_array() || pr.size() != 2) bad(where + ": pairs are two-element lists");
        matrix[element(dom, pr[0], where) * cod.size() + element(cod, pr[1], where)] = 1;
      }
    }
    val.morphisms[m.name] = make_rel(dom, cod, std::move(matrix));
  }
  return val;
}

Valuation<GameCategory> game_valuation_from_json(const Json& j, const TeleologicalSignature& s) {
  Valuation<GameCategory> val;
  auto sets = sets_from_json(j);
  lens_objects(j, s, val, sets);
  const auto& morphisms = morphisms_of(j);
  for (const auto& m : s.morphisms) {
    if (!morphisms.contains(m.name)) continue;
    auto where = "morphism '" + m.name + "'";
    const auto& g = morphisms.at(m.name);
    auto dom = eval_word<GameCategory>(m.dom, val), cod = eval_word<GameCategory>(m.cod, val);
    auto kind = as_string(field(g, "kind", where), where + " kind");
    if (kind == "decision") {
      if (dom.backward.size() != 1) bad(where + ": a decision's domain is (X, 1)");
      auto game = decision(dom.forward, cod.forward, cod.backward);
      val.morphisms[m.name] = std::move(game);
    } else if (kind == "computation") {
      const auto& f = field(g, "function", where);
      if (dom.backward.size() == 1 && cod.backward.size() == 1) {
        val.morphisms[m.name] = computation_cov(
            {dom.forward, cod.forward, table_from_json(f, dom.forward, cod.forward, where)});
      } else if (dom.forward.size() == 1 && cod.forward.size() == 1) {
        val.morphisms[m.name] = computation_contra(
            {cod.backward, dom.backward, table_from_json(f, cod.backward, dom.backward, where)});
      } else {
        bad(where + ": a computation is typed (X, 1) -> (Y, 1) or (1, Y) -> (1, X)");
      }
    } else if (kind == "lens") {
      val.morphisms[m.name] = lift_lens(lens_from_json(g, dom, cod, where));
    } else {
      bad(where + ": unknown game kind '" + kind + "'");
    }
    // keep the declared boundary exactly
    if (!(val.morphisms[m.name].dom == dom) || !(val.morphisms[m.name].cod == cod)) {
      bad(where + ": value is not typed " + dom.to_string() + " -> " + cod.to_string());
    }
  }
  return val;
}

GameFixture fixture_from_json(const Json& j) {
  GameFixture f;
  f.name = j.contains("name") ? as_string(j.at("name"), "name") : "game";
  auto names = [&](const char* key) {
    std::vector<std::string> out;
    for (const auto& e : field(j, key, "fixture")) out.push_back(as_string(e, key));
    return out;
  };
  f.spec.x = make_set("X", names("X"));
  f.spec.y = make_set("Y", names("Y"));
  const auto& rows = field(j, "payoffs", "fixture");
  if (!rows.is_array() || rows.size() != f.spec.x.size()) bad("payoffs: one row per element of X");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != f.spec.y.size()) bad("payoffs: one entry per element of Y");
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2) bad("payoffs: each entry is a pair [u1, u2]");
      auto q = [&](const Json& v) {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        return parse_rational(as_string(v, "payoff"));
      };
      out.emplace_back(q(cell[0]), q(cell[1]));
    }
    f.spec.payoffs.push_back(std::move(out));
  }
  if (j.contains("variants")) {
    for (const auto& v : j.at("variants")) f.variants.push_back(parse_variant(as_string(v, "variants")));
  } else if (j.contains("variant")) {
    f.variants.push_back(parse_variant(as_string(j.at("variant"), "variant")));
  } else {
    f.variants = {Fig1Variant::simultaneous, Fig1Variant::sequential};
    if (j.contains("partition")) f.variants.push_back(Fig1Variant::imperfect);
  }
  if (j.contains("partition")) {
    std::vector<std::vector<std::string>> classes;
    for (const auto& c : j.at("partition")) {
      std::vector<std::string> cls;
      for (const auto& e : c) cls.push_back(as_string(e, "partition"));
      classes.push_back(std::move(cls));
    }
    f.spec.partition = std::move(classes);
  }
  return f;
}

// ---------------------------------------------------------------- output

Json to_json(const FinSet& s) {
  Json out{{"name", s.name()}, {"elements", Json::array()}};
  for (std::size_t i = 0; i < s.size(); ++i) out["elements"].push_back(s.element_name(i));
  return out;
}

Json to_json(const LensObject& o) {
  return {{"forward", to_json(o.forward)}, {"backward", to_json(o.backward)}};
}

Json to_json(const FinLens& l) {
  Json view = Json::object(), update = Json::object();
  const auto& x = l.dom.forward;
  const auto& r = l.cod.backward;
  for (std::size_t i = 0; i < x.size(); ++i) {
    view[x.element_name(i)] = l.cod.forward.element_name(l.get(i));
    for (std::size_t k = 0; k < r.size(); ++k) {
      update["(" + x.element_name(i) + "," + r.element_name(k) + ")"] =
          l.dom.backward.element_name(l.put(i, k));
    }
  }
  return {{"instance", "lens"}, {"dom", to_json(l.dom)}, {"cod", to_json(l.cod)},
          {"view", view}, {"update", update}, {"adaptor", is_adaptor(l)}};
}

Json to_json(const FinRel& r) {
  Json pairs = Json::array(), matrix = Json::array();
  for (std::size_t a = 0; a < r.dom.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < r.cod.size(); ++b) {
      row.push_back(r.holds(a, b) ? 1 : 0);
      if (r.holds(a, b)) pairs.push_back({r.dom.element_name(a), r.cod.element_name(b)});
    }
    matrix.push_back(row);
  }
  return {{"instance", "rel"}, {"dom", to_json(r.dom)}, {"cod", to_json(r.cod)},
          {"pairs", pairs}, {"matrix", matrix}};
}

Json to_json(const ScalarGame& s) {
  Json br = Json::object(), eq = Json::array();
  for (std::size_t i = 0; i < s.best_response.size(); ++i) {
    Json set = Json::array();
    for (std::size_t k = 0; k < s.best_response[i].size(); ++k) {
      if (s.best_response[i][k]) set.push_back(s.strategies.element_name(k));
    }
    br[s.strategies.element_name(i)] = set;
  }
  for (auto e : equilibria(s)) eq.push_back(s.strategies.element_name(e));
  return {{"best_response", br}, {"equilibria", eq}};
}

Json to_json(const FinGame& g) {
  Json play = Json::object(), coplay = Json::object();
  const auto& sigma = g.strategies;
  const auto& x = g.dom.forward;
  const auto& r = g.cod.backward;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto key = "(" + sigma.element_name(s) + "," + x.element_name(i);
      play[key + ")"] = g.cod.forward.element_name(g.P(s, i));
      for (std::size_t k = 0; k < r.size(); ++k) {
        coplay[key + "," + r.element_name(k) + ")"] = g.dom.backward.element_name(g.C(s, i, k));
      }
    }
  }
  Json out{{"instance", "game"}, {"dom", to_json(g.dom)}, {"cod", to_json(g.cod)},
           {"strategies", to_json(sigma)}, {"play", play}, {"coplay", coplay}};
  if (g.dom == lens_unit() && g.cod == lens_unit()) out["scalar"] = to_json(scalar_of(g));
  return out;
}

namespace {

std::string elements_text(const FinSet& s) {
  std::string out = s.name() + " = {";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s.element_name(i);
  return out + "}";
}

}  // namespace

std::string render_text(const FinLens& l) {
  std::ostringstream out;
  out << "lens " << l.dom.to_string() << " -> " << l.cod.to_string()
      << (is_adaptor(l) ? " (adaptor)" : "") << "\n";
  out << "view:\n";
  for (std::size_t i = 0; i < l.dom.forward.size(); ++i) {
    out << "  " << l.dom.forward.element_name(i) << " -> "
        << l.cod.forward.element_name(l.get(i)) << "\n";
  }
  out << "update:\n";
  for (std::size_t i = 0; i < l.dom.forward.size(); ++i) {
    for (std::size_t k = 0; k < l.cod.backward.size(); ++k) {
      out << "  " << l.dom.forward.element_name(i) << ", " << l.cod.backward.element_name(k)
          << " -> " << l.dom.backward.element_name(l.put(i, k)) << "\n";
    }
  }
  return out.str();
}

std::string render_text(const FinRel& r) {
  std::ostringstream out;
  out << "relation " << r.dom.name() << " -> " << r.cod.name() << "\n";
  for (std::size_t a = 0; a < r.dom.size(); ++a) {
    out << "  ";
    for (std::size_t b = 0; b < r.cod.size(); ++b) out << (b ? " " : "") << (r.holds(a, b) ? 1 : 0);
    out << "    " << r.dom.element_name(a) << "\n";
  }
  out << "pairs:";
  bool any = false;
  for (std::size_t a = 0; a < r.dom.size(); ++a) {
    for (std::size_t b = 0; b < r.cod.size(); ++b) {
      if (!r.holds(a, b)) continue;
      out << " (" << r.dom.element_name(a) << ", " << r.cod.element_name(b) << ")";
      any = true;
    }
  }
  out << (any ? "" : " none") << "\n";
  return out.str();
}

std::string render_text(const FinGame& g) {
  std::ostringstream out;
  out << "game " << g.dom.to_string() << " -> " << g.cod.to_string() << "\n";
  out << "strategies: " << elements_text(g.strategies) << "\n";
  out << "play:\n";
  for (std::size_t s = 0; s < g.strategies.size(); ++s) {
    for (std::size_t i = 0; i < g.dom.forward.size(); ++i) {
      out << "  " << g.strategies.element_name(s) << ", " << g.dom.forward.element_name(i)
          << " -> " << g.cod.forward.element_name(g.P(s, i)) << "\n";
    }
  }
  if (g.dom == lens_unit() && g.cod == lens_unit()) {
    auto scalar = scalar_of(g);
    out << "best response:\n";
    for (std::size_t s = 0; s < scalar.best_response.size(); ++s) {
      out << "  " << g.strategies.element_name(s) << " -> {";
      bool first = true;
      for (std::size_t k = 0; k < scalar.best_response[s].size(); ++k) {
        if (!scalar.best_response[s][k]) continue;
        out << (first ? "" : ", ") << g.strategies.element_name(k);
        first = false;
      }
      out << "}\n";
    }
    out << "equilibria:";
    auto eq = equilibria(scalar);
    for (auto e : eq) out << " " << g.strategies.element_name(e);
    out << (eq.empty() ? " none" : "") << "\n";
  } else {
    out << "coplay:\n";
    for (std::size_t s = 0; s < g.strategies.size(); ++s) {
      for (std::size_t i = 0; i < g.dom.forward.size(); ++i) {
        for (std::size_t k = 0; k < g.cod.backward.size(); ++k) {
          out << "  " << g.strategies.element_name(s) << ", " << g.dom.forward.element_name(i)
              << ", " << g.cod.backward.element_name(k) << " -> "
              << g.dom.backward.element_name(g.C(s, i, k)) << "\n";
        }
      }
    }
  }
  return out.str();
}

}  // namespace teleo

#include "teleo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "teleo/equivalence.hpp"
#include "teleo/io.hpp"
#include "teleo/nash.hpp"
#include "teleo/samples.hpp"

namespace teleo {

namespace {

struct Options {
  std::string sig;
  std::string val;
  std::string instance = "lens";
  std::string mode;
  std::string output;
  bool json = false;
  std::size_t size = 2;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> terms;
  std::string fixture;
};

std::string term_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

TeleologicalSignature load_signature(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::invalid_input, "--sig is required");
  auto s = signature_from_json(load_json(path));
  require_valid(s);
  return s;
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back(l.to_string());
  return out;
}

// ---------------------------------------------------------------- check

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  auto sig = load_signature(o.sig);
  struct Item {
    std::string label;
    std::string text;
  };
  std::vector<Item> items;
  for (const auto& arg : o.terms) {
    if (!arg.empty() && arg.front() == '@') {
      std::istringstream lines(read_file(arg.substr(1)));
      std::string line;
      int number = 0;
      while (std::getline(lines, line)) {
        ++number;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        items.push_back({arg.substr(1) + ":" + std::to_string(number), line});
      }
    } else {
      items.push_back({"term", arg});
    }
  }
  Json report = Json::array();
  for (const auto& item : items) {
    try {
      auto typed = typecheck(parse_term(item.text), sig);
      if (o.json) {
        report.push_back({{"where", item.label}, {"term", to_string(*typed.term)},
                          {"dom", word_json(typed.dom)}, {"cod", word_json(typed.cod)}});
      } else {
        out << item.label << ": " << to_string(*typed.term) << " : " << to_string(typed.dom)
            << " → " << to_string(typed.cod) << "\n";
      }
    } catch (const Error& e) {
      if (o.json) {
        report.push_back({{"where", item.label}, {"error", to_string(e.code())}, {"message", e.what()}});
        out << Json{{"ok", false}, {"terms", report}}.dump(2) << "\n";
      }
      err << item.label << ": " << e.what() << "\n";
      return kExitNegative;
    }
  }
  if (o.json) out << Json{{"ok", true}, {"terms", report}}.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- eq

int cmd_eq(const Options& o, std::ostream& out, std::ostream&) {
  auto sig = load_signature(o.sig);
  if (o.terms.size() != 2) throw Error(ErrorCode::invalid_input, "eq takes two terms");
  auto a = typecheck(parse_term(term_text(o.terms[0])), sig);
  auto b = typecheck(parse_term(term_text(o.terms[1])), sig);
  if (a.dom != b.dom || a.cod != b.cod) {
    throw Error(ErrorCode::boundary_mismatch,
                "terms have types " + to_string(a.dom) + " → " + to_string(a.cod) + " and " +
                    to_string(b.dom) + " → " + to_string(b.cod));
  }
  auto mode = o.mode.empty() ? std::string("t") : o.mode;
  if (mode != "c" && mode != "t") throw Error(ErrorCode::invalid_input, "--mode is c or t");
  auto m = expand_signature(sig);
  auto ga = elaborate(a, m), gb = elaborate(b, m);
  bool equivalent = false;
  Json reflected = Json::array();
  if (mode == "c") {
    equivalent = circuit_iso(ga, gb);
  } else if (auto w = teleo_witness(ga, gb)) {
    equivalent = true;
    for (auto n : *w) reflected.push_back(ga.nodes[n].label + "#" + std::to_string(n));
  }
  auto verdict = equivalent ? "equivalent" : "not-equivalent";
  if (o.json) {
    Json j{{"mode", mode}, {"verdict", verdict}, {"dom", word_json(a.dom)}, {"cod", word_json(a.cod)}};
    if (mode == "t" && equivalent) j["reflected"] = reflected;
    out << j.dump(2) << "\n";
  } else {
    out << verdict << "\n";
  }
  return equivalent ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- eval

template <TeleologicalCategory C>
int eval_in(const Options& o, const TeleologicalSignature& sig, const Valuation<C>& val,
            std::ostream& out) {
  auto report = validate_valuation(sig, val);
  if (!report.ok()) {
    const auto& issue = report.issues.front();
    throw Error(issue.code, issue.message);
  }
  if (o.terms.size() != 1) throw Error(ErrorCode::invalid_input, "eval takes one term");
  auto typed = typecheck(parse_term(term_text(o.terms[0])), sig);
  auto graph = elaborate(typed, expand_signature(sig));
  auto value = evaluate<C>(graph, val);
  if (o.json) {
    out << to_json(value).dump(2) << "\n";
  } else {
    out << render_text(value);
  }
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream&) {
  auto sig = load_signature(o.sig);
  if (o.val.empty()) throw Error(ErrorCode::invalid_input, "--val is required");
  auto j = load_json(o.val);
  if (o.instance == "lens") return eval_in<LensCategory>(o, sig, lens_valuation_from_json(j, sig), out);
  if (o.instance == "rel") return eval_in<RelCategory>(o, sig, rel_valuation_from_json(j, sig), out);
  if (o.instance == "game") return eval_in<GameCategory>(o, sig, game_valuation_from_json(j, sig), out);
  throw Error(ErrorCode::invalid_input, "unknown instance '" + o.instance + "'");
}

// ---------------------------------------------------------------- laws

// Objects and dualisable morphisms of a valuation, as an extra law sample.
template <TeleologicalCategory C>
LawReport valuation_laws(const TeleologicalSignature& sig, const Valuation<C>& val) {
  std::vector<typename C::Object> objects;
  std::vector<typename C::Morphism> dualisable;
  for (const auto& [name, obj] : val.objects) objects.push_back(obj);
  for (const auto& m : sig.morphisms) {
    auto it = val.morphisms.find(m.name);
    if (m.dualisable && it != val.morphisms.end()) dualisable.push_back(it->second);
  }
  return check_axioms<C>(objects, dualisable);
}

int cmd_laws(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<std::pair<std::string, LawReport>> parts;
  if (o.instance == "rel") {
    parts.emplace_back("axioms on relations", rel_law_suite(o.size, o.samples, o.seed));
  } else if (o.instance == "lens") {
    parts.emplace_back("axioms on adaptors", lens_law_suite(o.size));
  } else if (o.instance == "game") {
    parts.emplace_back("axioms on lifted adaptors", game_law_suite(o.size));
    parts.emplace_back("lens embedding is a teleological functor", lift_functor_suite(o.size));
  } else {
    throw Error(ErrorCode::invalid_input, "unknown instance '" + o.instance + "'");
  }
  if (!o.val.empty()) {
    auto sig = load_signature(o.sig);
    auto j = load_json(o.val);
    LawReport r;
    if (o.instance == "rel") r = valuation_laws(sig, rel_valuation_from_json(j, sig));
    if (o.instance == "lens") r = valuation_laws(sig, lens_valuation_from_json(j, sig));
    if (o.instance == "game") r = valuation_laws(sig, game_valuation_from_json(j, sig));
    parts.emplace_back("axioms on the valuation", r);
  }
  bool ok = std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.second.ok(); });
  if (o.json) {
    Json j{{"instance", o.instance}, {"size", o.size}, {"ok", ok}, {"suites", Json::array()}};
    for (const auto& [name, r] : parts) {
      j["suites"].push_back({{"name", name}, {"checked", r.checked}, {"failures", r.failures}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, r] : parts) {
      out << name << ": " << r.checked << " checks, " << r.failures.size() << " failures\n";
      for (const auto& f : r.failures) out << "  FAILED " << f << "\n";
    }
    out << (ok ? "all laws hold" : "laws violated") << "\n";
  }
  return ok ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- nash

std::string profile_list(const FinSet& profiles, const std::vector<std::size_t>& eq) {
  if (eq.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < eq.size(); ++i) out += (i ? " " : "") + profiles.element_name(eq[i]);
  return out;
}

int cmd_nash(const Options& o, std::ostream& out, std::ostream&) {
  if (o.fixture.empty()) throw Error(ErrorCode::invalid_input, "nash takes a game fixture");
  auto fixture = fixture_from_json(load_json(o.fixture));
  auto variants = fixture.variants;
  if (!o.mode.empty()) variants = {parse_variant(o.mode)};
  bool all = true;
  Json results = Json::array();
  for (auto v : variants) {
    auto outcome = solve_fig1(build_fig1(v, fixture.spec));
    bool agree = outcome.tables_agree && outcome.equilibria_agree;
    all = all && agree;
    const auto& profiles = outcome.scalar.strategies;
    if (o.json) {
      Json comp = Json::array(), orc = Json::array();
      for (auto e : outcome.equilibria) comp.push_back(profiles.element_name(e));
      for (auto e : outcome.oracle.equilibria) orc.push_back(outcome.oracle.profiles.element_name(e));
      results.push_back({{"variant", to_string(v)},
                         {"profiles", profiles.size()},
                         {"compositional_equilibria", comp},
                         {"oracle_equilibria", orc},
                         {"tables_agree", outcome.tables_agree},
                         {"verdict", agree ? "agree" : "disagree"}});
    } else {
      out << fixture.name << " variant " << to_string(v) << ": " << profiles.size()
          << " profiles over " << profiles.name() << "\n";
      out << "  compositional equilibria: " << profile_list(profiles, outcome.equilibria) << "\n";
      out << "  oracle equilibria:        "
          << profile_list(outcome.oracle.profiles, outcome.oracle.equilibria) << "\n";
      out << "  best-response tables:     " << (outcome.tables_agree ? "equal" : "different") << "\n";
      out << "  " << (agree ? "agree" : "disagree") << "\n";
    }
  }
  if (o.json) {
    out << Json{{"fixture", fixture.name}, {"results", results}, {"verdict", all ? "agree" : "disagree"}}
               .dump(2)
        << "\n";
  }
  return all ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- render

int cmd_render(const Options& o, std::ostream& out, std::ostream&) {
  auto sig = load_signature(o.sig);
  if (o.terms.size() != 1) throw Error(ErrorCode::invalid_input, "render takes one term");
  auto typed = typecheck(parse_term(term_text(o.terms[0])), sig);
  auto dot = render_dot(elaborate(typed, expand_signature(sig)));
  if (o.output.empty()) {
    out << dot;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::invalid_input, "cannot write '" + o.output + "'");
    file << dot;
    if (o.json) out << Json{{"output", o.output}, {"bytes", dot.size()}}.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Teleological string diagrams: equivalence, evaluation and games", "teleo"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "typecheck terms (inline or @file, one per line)");
  check->add_option("--sig", o.sig, "signature JSON")->required();
  check->add_option("terms", o.terms, "terms")->required();
  check->add_flag("--json", o.json, "JSON output");

  auto* eq = app.add_subcommand("eq", "decide equivalence of two terms");
  eq->add_option("--sig", o.sig, "signature JSON")->required();
  eq->add_option("--mode", o.mode, "c: circuit isomorphism, t: teleological (default)");
  eq->add_option("terms", o.terms, "two terms")->expected(2)->required();
  eq->add_flag("--json", o.json, "JSON output");

  auto* eval = app.add_subcommand("eval", "evaluate a term in a finite instance");
  eval->add_option("--sig", o.sig, "signature JSON")->required();
  eval->add_option("--val", o.val, "valuation JSON")->required();
  eval->add_option("--instance", o.instance, "lens | rel | game");
  eval->add_option("terms", o.terms, "term")->expected(1)->required();
  eval->add_flag("--json", o.json, "JSON output");

  auto* laws = app.add_subcommand("laws", "check the teleological axioms on an instance");
  laws->add_option("--instance", o.instance, "lens | rel | game");
  laws->add_option("--size", o.size, "largest carrier size sampled exhaustively");
  laws->add_option("--samples", o.samples, "random relations one size larger (rel)");
  laws->add_option("--seed", o.seed, "random seed");
  laws->add_option("--sig", o.sig, "signature JSON (with --val)");
  laws->add_option("--val", o.val, "also check the valuation's objects and dualisable morphisms");
  laws->add_flag("--json", o.json, "JSON output");

  auto* nash = app.add_subcommand("nash", "compare compositional and classical equilibria");
  nash->add_option("fixture", o.fixture, "game fixture JSON")->required();
  nash->add_option("--mode", o.mode, "a | b | c (default: the fixture's variants)");
  nash->add_flag("--json", o.json, "JSON output");

  auto* render = app.add_subcommand("render", "write the circuit graph of a term as DOT");
  render->add_option("--sig", o.sig, "signature JSON")->required();
  render->add_option("terms", o.terms, "term")->expected(1)->required();
  render->add_option("-o,--output", o.output, "output path (default stdout)");
  render->add_flag("--json", o.json, "JSON summary when writing a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (eq->parsed()) return cmd_eq(o, out, err);
    if (eval->parsed()) return cmd_eval(o, out, err);
    if (laws->parsed()) return cmd_laws(o, out, err);
    if (nash->parsed()) return cmd_nash(o, out, err);
    if (render->parsed()) return cmd_render(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace teleo

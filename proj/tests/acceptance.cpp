// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "teleo/category.hpp"
#include "teleo/cli.hpp"
#include "teleo/equivalence.hpp"
#include "teleo/io.hpp"

using namespace teleo;
using support::W;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// ---------------------------------------------------------------- 1

// Both sides of the counit law on the adaptor (f, g) : (X, S) -> (Y, R),
// compared with each other, with the closed form ((x, r), *) ↦ (g(r), f(x)),
// and with the evaluated terms.
Outcome counit_law() {
  TeleologicalSignature s;
  s.objects = {"x", "y"};
  s.morphisms = {{"f", W({"x"}), W({"y"}), true}};
  auto lhs_graph = support::graph_of("(f | id(y*)) ; cup(y)", s);
  auto rhs_graph = support::graph_of("(id(x) | f^) ; cup(x)", s);
  std::size_t count = 0;
  Outcome o;
  auto objects = lens_objects(3);
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      for (const auto& l : all_adaptors(a, b)) {
        ++count;
        auto ys = lens_object_dual(b);
        auto lhs = lens_compose(lens_tensor(l, lens_id(ys)), lens_counit(b));
        auto rhs = lens_compose(lens_tensor(lens_id(a), lens_dual(l)), lens_counit(a));
        bool ok = lens_eq(lhs, rhs);
        auto nx = a.forward.size(), nr = b.backward.size(), ny = b.forward.size();
        for (std::size_t x = 0; x < nx && ok; ++x) {
          for (std::size_t r = 0; r < nr && ok; ++r) {
            auto expected = pair_index(l.put(x, r), l.get(x), ny);
            ok = lhs.put(pair_index(x, r, nr), 0) == expected;
          }
        }
        Valuation<LensCategory> val;
        val.objects = {{"x", a}, {"y", b}};
        val.morphisms = {{"f", l}};
        ok = ok && lens_eq(evaluate<LensCategory>(lhs_graph, val), lhs) &&
             lens_eq(evaluate<LensCategory>(rhs_graph, val), rhs);
        if (!ok && o.pass) {
          o.pass = false;
          o.detail = "mismatch at " + a.to_string() + " → " + b.to_string() + "; ";
        }
      }
    }
  }
  o.detail += std::to_string(count) + " adaptors";
  return o;
}

// ---------------------------------------------------------------- 2

Outcome axiom_suite() {
  Outcome o;
  std::ostringstream d;
  auto add = [&](const char* name, const LawReport& r) {
    d << name << " " << r.checked << " checks/" << r.failures.size() << " failures; ";
    if (!r.ok()) {
      o.pass = false;
      d << "first failure: " << r.failures.front() << "; ";
    }
  };
  add("rel", rel_law_suite(2, 500, 2024));
  add("lens", lens_law_suite(2));
  add("game", game_law_suite(2));
  add("lens→game functor", lift_functor_suite(2));
  o.detail = d.str();
  o.detail.resize(o.detail.size() - 2);
  return o;
}

// ---------------------------------------------------------------- 3

Outcome coherence() {
  auto s = support::corpus_signature();
  auto m = expand_signature(s);
  auto pairs = support::rewrite_corpus(45, 7, 6);
  std::mt19937_64 rng(77);
  Outcome o;
  std::size_t evaluations = 0;
  for (const auto& p : pairs) {
    auto gl = elaborate(p.lhs, m), gr = elaborate(p.rhs, m);
    bool ok = teleo_eq(gl, gr);
    for (int k = 0; k < 3 && ok; ++k) {
      auto lv = support::random_lens_valuation(s, rng, 3);
      auto rv = support::random_rel_valuation(s, rng, 3);
      ok = lens_eq(evaluate<LensCategory>(gl, lv), evaluate<LensCategory>(gr, lv)) &&
           rel_eq(evaluate<RelCategory>(gl, rv), evaluate<RelCategory>(gr, rv));
      evaluations += 2;
    }
    if (!ok && o.pass) {
      o.pass = false;
      o.detail = p.rule + " pair fails: " + to_string(*p.lhs.term) + "  vs  " +
                 to_string(*p.rhs.term) + "; ";
    }
  }
  o.detail += std::to_string(pairs.size()) + " rewrite pairs, " + std::to_string(evaluations) +
              " evaluations";
  return o;
}

// ---------------------------------------------------------------- 4

std::vector<CircuitGraph> iso_corpus() {
  auto s = support::corpus_signature();
  auto m = expand_signature(s);
  std::mt19937_64 rng(31);
  support::TermGenerator gen{s, rng};
  std::vector<CircuitGraph> out;
  auto mutate = [&](CircuitGraph g) {
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
      for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
        if (g.edges[a].object == g.edges[b].object) swaps.emplace_back(a, b);
      }
    }
    if (!swaps.empty()) {
      auto [a, b] = swaps[rng() % swaps.size()];
      std::swap(g.edges[a].target, g.edges[b].target);
    }
    return g;
  };
  auto add_family = [&](const CircuitGraph& g) {
    out.push_back(g);
    out.push_back(support::shuffled(g, rng));
    out.push_back(support::shuffled(mutate(g), rng));
  };
  for (const char* text : {"(n ; k ; m) | (n ; k ; m)", "n ; k ; f ; g ; h ; m",
                           "(n ; k ; m) | (n ; k ; m) | f",
                           "(n ; k ; m) | f", "f | (n ; k ; m)"}) {
    add_family(support::graph_of(text, s));
  }
  while (out.size() < 150) {
    auto t = gen.term(gen.random_word(3), 2 + gen.below(3));
    auto g = elaborate(t, m);
    if (g.nodes.empty() || g.nodes.size() > 8) continue;
    add_family(g);
  }
  return out;
}

Outcome iso_oracle() {
  auto graphs = iso_corpus();
  Outcome o;
  std::size_t pairs = 0, positive = 0, largest = 0;
  for (const auto& g : graphs) largest = std::max(largest, g.nodes.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      ++pairs;
      bool expected = support::brute_force_iso(graphs[i], graphs[j]);
      positive += expected;
      if (circuit_iso(graphs[i], graphs[j]) != expected && o.pass) {
        o.pass = false;
        o.detail = "disagreement on graphs " + std::to_string(i) + ", " + std::to_string(j) + "; ";
      }
    }
  }
  o.detail += std::to_string(graphs.size()) + " graphs (≤ " + std::to_string(largest) +
              " nodes), " + std::to_string(pairs) + " pairs, " + std::to_string(positive) +
              " isomorphic";
  return o;
}

// ---------------------------------------------------------------- 5

Outcome counit_decidability() {
  const std::string dir = TELEO_FIXTURES;
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::pair{code, out.str()};
  };
  auto [dual_code, dual_out] = run({"eq", "--mode", "t", "--sig", dir + "/signatures/counit_law.json",
                                    "(f | id(y*)) ; cup(y)", "(id(x) | f^) ; cup(x)"});
  auto [rigid_code, rigid_out] =
      run({"eq", "--mode", "t", "--sig", dir + "/signatures/counit_law_rigid.json",
           "(f | id(y*)) ; cup(y)", "(id(x) | g) ; cup(x)"});
  Outcome o;
  o.pass = dual_code == kExitOk && dual_out == "equivalent\n" && rigid_code == kExitNegative &&
           rigid_out == "not-equivalent\n";
  o.detail = "dualisable f: " + dual_out.substr(0, dual_out.size() - 1) +
             "; non-dualisable f with partner g: " + rigid_out.substr(0, rigid_out.size() - 1);
  return o;
}

// ---------------------------------------------------------------- 6

Outcome games() {
  Outcome o;
  std::size_t runs = 0;
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(TELEO_FIXTURES "/games")) {
    paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    auto fixture = fixture_from_json(load_json(path));
    for (auto v : {Fig1Variant::simultaneous, Fig1Variant::sequential, Fig1Variant::imperfect}) {
      ++runs;
      auto out = solve_fig1(build_fig1(v, fixture.spec));
      bool ok = out.tables_agree && out.equilibria_agree &&
                out.oracle.equilibria == out.oracle.deviation_equilibria &&
                out.equilibria == support::deviation_equilibria(v, fixture.spec);
      if (!ok && o.pass) {
        o.pass = false;
        o.detail = fixture.name + " variant " + to_string(v) + " disagrees; ";
      }
    }
  }
  o.detail += std::to_string(paths.size()) + " fixtures × 3 variants = " + std::to_string(runs) +
              " comparisons";
  return o;
}

// ---------------------------------------------------------------- 7

Outcome rel_counit() {
  TeleologicalSignature s;
  s.objects = {"x"};
  auto g = support::graph_of("cup(x)", s);
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    Valuation<RelCategory> v;
    v.objects["x"] = numbered_set(n);
    auto r = evaluate<RelCategory>(g, v);
    bool ok = r.dom.size() == n * n && r.cod.size() == 1;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = r.holds(i * n + j, 0) == (i == j);
    }
    o.pass = o.pass && ok;
    o.detail += "|X|=" + std::to_string(n) + (ok ? " diagonal" : " NOT diagonal") + (n < 3 ? ", " : "");
  }
  return o;
}

// ---------------------------------------------------------------- 8

Outcome duality() {
  auto s = support::corpus_signature();
  auto m = expand_signature(s);
  std::mt19937_64 rng(808);
  support::TermGenerator gen{s, rng};
  Outcome o;
  std::size_t count = 0;
  while (count < 150) {
    auto t = support::random_dualisable(gen, 1 + gen.below(4));
    auto g = elaborate(t, m);
    if (g.nodes.empty()) continue;
    ++count;
    auto d = dual_term(t, s);
    bool ok = equal(*dual_term(d, s).term, *t.term);
    auto dg = elaborate(d, m);
    auto reflected = dual_graph(g);
    ok = ok && circuit_iso(dg, reflected);
    ok = ok && dg.inputs == word_dual(g.outputs) && dg.outputs == word_dual(g.inputs);
    std::multiset<std::tuple<std::string, int, std::string, std::string>> expected, actual;
    for (const auto& n : g.nodes) {
      auto r = reflect_node(n);
      expected.insert({r.label, r.parity, to_string(r.inputs), to_string(r.outputs)});
      ok = ok && r.parity == 1 - n.parity && r.inputs == word_dual(n.outputs) &&
           r.outputs == word_dual(n.inputs);
    }
    for (const auto& n : dg.nodes) {
      actual.insert({n.label, n.parity, to_string(n.inputs), to_string(n.outputs)});
    }
    ok = ok && expected == actual;
    if (!ok && o.pass) {
      o.pass = false;
      o.detail = "fails on " + to_string(*t.term) + "; ";
    }
  }
  o.detail += std::to_string(count) + " dualisable terms";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    Outcome (*run)();
  };
  std::vector<Criterion> criteria = {
      {"counit law on all adaptors, carriers <= 3", 60, counit_law},
      {"teleological axioms in Rel, Lens, Game", 120, axiom_suite},
      {"rewrite corpus: teleo_eq and equal evaluations", 300, coherence},
      {"circuit_iso agrees with brute-force bijection search", 120, iso_oracle},
      {"eq decides the counit law pair", 5, counit_decidability},
      {"two-player games: tables and equilibria match the oracle", 120, games},
      {"cup(x) in Rel is the diagonal", 1, rel_counit},
      {"dual_term involution and reflection of graphs", 30, duality},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget_seconds;
    bool pass = o.pass && in_time;
    failures += !pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << c.name << " :: " << o.detail
              << " (" << t.str() << " s" << (in_time ? "" : ", over budget") << ")\n";
  }
  return failures == 0 ? 0 : 1;
}

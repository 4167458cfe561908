#include "teleo/nash.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace teleo {

FinSet ClassicalGame::profiles() const {
  FinSet out = unit_set();
  for (const auto& s : strategies) out = product(out, s);
  return out;
}

namespace {

// Profile index with player i's component replaced.
std::size_t with_component(const ClassicalGame& c, std::size_t profile, std::size_t player,
                           std::size_t choice) {
  std::size_t stride = 1;
  for (std::size_t j = c.strategies.size(); j-- > player + 1;) stride *= c.strategies[j].size();
  auto n = c.strategies[player].size();
  auto current = (profile / stride) % n;
  return profile - current * stride + choice * stride;
}

std::size_t component(const ClassicalGame& c, std::size_t profile, std::size_t player) {
  std::size_t stride = 1;
  for (std::size_t j = c.strategies.size(); j-- > player + 1;) stride *= c.strategies[j].size();
  return (profile / stride) % c.strategies[player].size();
}

}  // namespace

OracleResult oracle_nash(const ClassicalGame& c) {
  OracleResult out;
  out.profiles = c.profiles();
  auto n = out.profiles.size();
  auto players = c.strategies.size();
  for (std::size_t sigma = 0; sigma < n; ++sigma) {
    // best replies of each player against σ's other components
    std::vector<std::vector<char>> best(players);
    bool stable = true;
    for (std::size_t i = 0; i < players; ++i) {
      auto m = c.strategies[i].size();
      std::vector<Rational> u(m);
      for (std::size_t s = 0; s < m; ++s) u[s] = c.payoff[with_component(c, sigma, i, s)][i];
      auto top = *std::max_element(u.begin(), u.end());
      best[i].resize(m);
      for (std::size_t s = 0; s < m; ++s) best[i][s] = u[s] == top;
      if (top > c.payoff[sigma][i]) stable = false;
    }
    Responses r(n, 0);
    for (std::size_t tau = 0; tau < n; ++tau) {
      bool all = true;
      for (std::size_t i = 0; i < players && all; ++i) all = best[i][component(c, tau, i)];
      r[tau] = all;
    }
    if (r[sigma]) out.equilibria.push_back(sigma);
    if (stable) out.deviation_equilibria.push_back(sigma);
    out.correspondence.push_back(std::move(r));
  }
  return out;
}

std::string to_string(Fig1Variant v) {
  switch (v) {
    case Fig1Variant::simultaneous: return "a";
    case Fig1Variant::sequential: return "b";
    case Fig1Variant::imperfect: return "c";
  }
  return "?";
}

Fig1Variant parse_variant(const std::string& text) {
  if (text == "a") return Fig1Variant::simultaneous;
  if (text == "b") return Fig1Variant::sequential;
  if (text == "c") return Fig1Variant::imperfect;
  throw Error(ErrorCode::invalid_input, "unknown game variant '" + text + "' (expected a, b or c)");
}

namespace {

Word word(std::initializer_list<const char*> letters) {
  Word w;
  for (const auto* l : letters) w.push_back(parse_signed_object(l));
  return w;
}

// Class of each element of X, validated against X.
std::pair<FinSet, std::vector<std::size_t>> quotient(
    const FinSet& x, const std::vector<std::vector<std::string>>& classes) {
  std::vector<std::size_t> cls(x.size(), classes.size());
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw Error(ErrorCode::invalid_partition, "partition has an empty class");
    std::string name = "{";
    for (std::size_t k = 0; k < classes[c].size(); ++k) {
      const auto& e = classes[c][k];
      auto i = x.index_of(e);
      if (!i) throw Error(ErrorCode::invalid_partition, "'" + e + "' is not an element of X");
      if (cls[*i] != classes.size()) {
        throw Error(ErrorCode::invalid_partition, "'" + e + "' appears in two classes");
      }
      cls[*i] = c;
      name += (k ? "," : "") + e;
    }
    names.push_back(name + "}");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (cls[i] == classes.size()) {
      throw Error(ErrorCode::invalid_partition,
                  "'" + x.element_name(i) + "' is not covered by the partition");
    }
  }
  return {make_set("X/~", names), cls};
}

}  // namespace

Fig1Build build_fig1(Fig1Variant variant, const Fig1Spec& spec) {
  auto nx = spec.x.size(), ny = spec.y.size();
  if (spec.payoffs.size() != nx) throw Error(ErrorCode::invalid_input, "payoff table needs one row per x");
  std::set<Rational> values;
  for (const auto& row : spec.payoffs) {
    if (row.size() != ny) throw Error(ErrorCode::invalid_input, "payoff row needs one entry per y");
    for (const auto& [u1, u2] : row) {
      values.insert(u1);
      values.insert(u2);
    }
  }
  std::vector<std::string> names;
  std::map<Rational, std::size_t> index;
  for (const auto& v : values) {
    index[v] = names.size();
    names.push_back(to_string(v));
  }
  auto p = make_set("P", names);
  auto np = p.size();

  Fig1Build out;
  auto& sig = out.signature;
  auto& val = out.valuation;
  sig.objects = {"x", "y", "p"};
  val.objects["x"] = {spec.x, unit_set()};
  val.objects["y"] = {spec.y, unit_set()};
  val.objects["p"] = {p, unit_set()};

  std::vector<std::size_t> u(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const auto& [u1, u2] = spec.payoffs[i][j];
      u[i * ny + j] = index[u1] * np + index[u2];
    }
  }
  sig.morphisms.push_back({"D1", {}, word({"x", "p*"}), false});
  sig.morphisms.push_back({"u", word({"x", "y"}), word({"p", "p"}), true});
  val.morphisms["D1"] = decision(unit_set(), spec.x, p);
  val.morphisms["u"] = computation_cov({product(spec.x, spec.y), product(p, p), u});

  std::vector<std::size_t> copy(nx);
  for (std::size_t i = 0; i < nx; ++i) copy[i] = i * nx + i;

  FinSet player2;
  std::vector<std::size_t> observed(nx);  // what player 2 sees at each x
  std::string text;
  switch (variant) {
    case Fig1Variant::simultaneous:
      sig.morphisms.push_back({"D2", {}, word({"y", "p*"}), false});
      val.morphisms["D2"] = decision(unit_set(), spec.y, p);
      text = "(D1 | D2) ; (id(x) | sym(p* ; y) | id(p*)) ; (u | id(p*, p*)) ; cup(p, p)";
      player2 = spec.y;
      std::fill(observed.begin(), observed.end(), 0);
      break;
    case Fig1Variant::sequential:
      sig.morphisms.push_back({"copy", word({"x"}), word({"x", "x"}), true});
      sig.morphisms.push_back({"D2", word({"x"}), word({"y", "p*"}), false});
      val.morphisms["copy"] = computation_cov({spec.x, product(spec.x, spec.x), copy});
      val.morphisms["D2"] = decision(spec.x, spec.y, p);
      text =
          "D1 ; (copy | id(p*)) ; (id(x) | D2 | id(p*)) ; (u | sym(p* ; p*)) ; cup(p, p)";
      player2 = power(spec.y, nx);
      for (std::size_t i = 0; i < nx; ++i) observed[i] = i;
      break;
    case Fig1Variant::imperfect: {
      if (!spec.partition) {
        throw Error(ErrorCode::invalid_partition, "imperfect-information variant needs a partition");
      }
      auto [q, cls] = quotient(spec.x, *spec.partition);
      sig.objects.insert("q");
      val.objects["q"] = {q, unit_set()};
      sig.morphisms.push_back({"copy", word({"x"}), word({"x", "x"}), true});
      sig.morphisms.push_back({"proj", word({"x"}), word({"q"}), true});
      sig.morphisms.push_back({"D2", word({"q"}), word({"y", "p*"}), false});
      val.morphisms["copy"] = computation_cov({spec.x, product(spec.x, spec.x), copy});
      val.morphisms["proj"] = computation_cov({spec.x, q, cls});
      val.morphisms["D2"] = decision(q, spec.y, p);
      text =
          "D1 ; (copy | id(p*)) ; (id(x) | proj | id(p*)) ; (id(x) | D2 | id(p*)) ; "
          "(u | sym(p* ; p*)) ; cup(p, p)";
      player2 = power(spec.y, q.size());
      observed = cls;
      break;
    }
  }
  out.term = parse_term(text);

  // Strategic form: player 2's strategy is a table from observations to Y,
  // in the same digit order as the decision's strategy set.
  auto& c = out.strategic_form;
  c.players = {"1", "2"};
  c.strategies = {spec.x, player2};
  auto n2 = player2.size();
  for (std::size_t s1 = 0; s1 < nx; ++s1) {
    for (std::size_t s2 = 0; s2 < n2; ++s2) {
      auto d = player2.digits(s2);
      auto y = d[observed[s1]];
      const auto& [u1, u2] = spec.payoffs[s1][y];
      c.payoff.push_back({u1, u2});
    }
  }
  return out;
}

Fig1Outcome solve_fig1(const Fig1Build& build) {
  auto typed = typecheck(build.term, build.signature);
  auto graph = elaborate(typed, expand_signature(build.signature));
  auto game = evaluate<GameCategory>(graph, build.valuation);
  Fig1Outcome out;
  out.scalar = scalar_of(game);
  out.equilibria = equilibria(out.scalar);
  out.oracle = oracle_nash(build.strategic_form);
  out.tables_agree = out.scalar.best_response == out.oracle.correspondence;
  out.equilibria_agree =
      out.equilibria == out.oracle.equilibria && out.equilibria == out.oracle.deviation_equilibria;
  return out;
}

}  // namespace teleo

#pragma once

// Shared by the unit tests and the acceptance runner: random well-typed
// terms, rewrite pairs, random valuations, and a brute-force isomorphism
// check that knows nothing about canonical forms.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "teleo/circuit_graph.hpp"
#include "teleo/nash.hpp"
#include "teleo/evaluate.hpp"
#include "teleo/samples.hpp"
#include "teleo/term.hpp"

namespace support {

using namespace teleo;

inline Word W(std::initializer_list<const char*> letters) {
  Word w;
  for (const auto* l : letters) w.push_back(parse_signed_object(l));
  return w;
}

inline TypedTerm typed(const std::string& text, const TeleologicalSignature& s) {
  return typecheck(parse_term(text), s);
}

inline CircuitGraph graph_of(const std::string& text, const TeleologicalSignature& s) {
  return elaborate(typed(text, s), expand_signature(s));
}

// ---------------------------------------------------------------- brute force ≅_c

// Tries every label-preserving node bijection; boundary ports are fixed.
inline bool brute_force_iso(const CircuitGraph& a, const CircuitGraph& b) {
  if (a.inputs != b.inputs || a.outputs != b.outputs) return false;
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  auto n = a.nodes.size();
  auto same_node = [&](std::size_t i, std::size_t j) {
    const auto& x = a.nodes[i];
    const auto& y = b.nodes[j];
    return x.label == y.label && x.parity == y.parity && x.inputs == y.inputs &&
           x.outputs == y.outputs;
  };
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::string, int, int>;
  auto key = [](const Edge& e, const std::vector<std::size_t>& phi) {
    auto map = [&](const PortRef& p) { return p.is_boundary() ? p.node : phi[p.node]; };
    return Key{map(e.source), e.source.port, map(e.target), e.target.port, e.object.to_string(),
               static_cast<int>(e.source_variance), static_cast<int>(e.target_variance)};
  };
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  std::multiset<Key> target;
  for (const auto& e : b.edges) target.insert(key(e, identity));

  std::vector<std::size_t> phi(n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      std::multiset<Key> mapped;
      for (const auto& e : a.edges) mapped.insert(key(e, phi));
      return mapped == target;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !same_node(i, j)) continue;
      used[j] = true;
      phi[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return search(search, 0);
}

// Same graph with nodes renumbered by `order` (new node k is old order[k])
// and edges shuffled.
inline CircuitGraph renumber(const CircuitGraph& g, const std::vector<std::size_t>& order,
                             std::mt19937_64& rng) {
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;
  CircuitGraph out;
  out.inputs = g.inputs;
  out.outputs = g.outputs;
  for (auto old : order) out.nodes.push_back(g.nodes[old]);
  for (auto e : g.edges) {
    if (!e.source.is_boundary()) e.source.node = inverse[e.source.node];
    if (!e.target.is_boundary()) e.target.node = inverse[e.target.node];
    out.edges.push_back(e);
  }
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

inline CircuitGraph shuffled(const CircuitGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> order(g.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return renumber(g, order, rng);
}

// ---------------------------------------------------------------- random terms

// Random well-typed terms built as layers: each layer covers the current
// word with generators, duals, symmetries, caps and identities.
struct TermGenerator {
  const TeleologicalSignature& sig;
  std::mt19937_64& rng;
  bool allow_caps = true;
  bool allow_duals = true;
  bool dualisable_only = false;
  std::size_t max_width = 4;

  bool chance(double p) { return std::bernoulli_distribution(p)(rng); }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  struct Piece {
    TermPtr term;
    std::size_t consumed;
    Word produced;
  };

  // Pieces that can start at position i of w.
  std::vector<Piece> options(const Word& w, std::size_t i, std::size_t width) {
    std::vector<Piece> out;
    Word rest(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    for (const auto& m : sig.morphisms) {
      if (dualisable_only && !m.dualisable) continue;
      auto fits = [&](const Word& dom, const Word& cod) {
        if (dom.size() > rest.size()) return false;
        if (!std::equal(dom.begin(), dom.end(), rest.begin())) return false;
        return width - dom.size() + cod.size() <= max_width;
      };
      if (!m.dom.empty() && fits(m.dom, m.cod)) out.push_back({gen(m.name), m.dom.size(), m.cod});
      if (allow_duals && m.dualisable) {
        auto ddom = word_dual(m.cod), dcod = word_dual(m.dom);
        if (!ddom.empty() && fits(ddom, dcod)) out.push_back({gen_dual(m.name), ddom.size(), dcod});
      }
    }
    if (rest.size() >= 2) {
      out.push_back({sym({rest[0]}, {rest[1]}), 2, {rest[1], rest[0]}});
    }
    if (rest.size() >= 3) {
      out.push_back({sym({rest[0]}, {rest[1], rest[2]}), 3, {rest[1], rest[2], rest[0]}});
    }
    if (allow_caps && rest.size() >= 2 && rest[1] == rest[0].dual()) {
      out.push_back({cup({rest[0]}), 2, {}});
    }
    return out;
  }

  // Generators with empty domain, placed next to a wire.
  std::vector<Piece> sources(std::size_t width) {
    std::vector<Piece> out;
    for (const auto& m : sig.morphisms) {
      if (dualisable_only && !m.dualisable) continue;
      if (m.dom.empty() && width + m.cod.size() <= max_width) out.push_back({gen(m.name), 0, m.cod});
      if (allow_duals && m.dualisable && m.cod.empty() && width + m.dom.size() <= max_width) {
        out.push_back({gen_dual(m.name), 0, word_dual(m.dom)});
      }
    }
    return out;
  }

  // One layer on w; returns the layer and its codomain.
  std::pair<TermPtr, Word> layer(const Word& w) {
    TermPtr t;
    Word cod;
    auto add = [&](TermPtr piece, const Word& produced) {
      t = t ? tensor(t, piece) : piece;
      cod.insert(cod.end(), produced.begin(), produced.end());
    };
    std::size_t i = 0;
    std::size_t width = w.size();
    if (chance(0.15)) {
      auto src = sources(width);
      if (!src.empty()) {
        auto& p = src[below(src.size())];
        add(p.term, p.produced);
        width += p.produced.size();
      }
    }
    while (i < w.size()) {
      auto opts = options(w, i, width);
      if (!opts.empty() && chance(0.6)) {
        auto& p = opts[below(opts.size())];
        add(p.term, p.produced);
        width = width - p.consumed + p.produced.size();
        i += p.consumed;
      } else {
        add(id({w[i]}), {w[i]});
        ++i;
      }
    }
    if (!t) t = id({});
    return {t, cod};
  }

  TypedTerm term(const Word& dom, std::size_t layers) {
    TermPtr t;
    Word w = dom;
    for (std::size_t k = 0; k < layers; ++k) {
      auto [l, cod] = layer(w);
      t = t ? comp(t, l) : l;
      w = cod;
    }
    if (!t) t = id(dom);
    return typecheck(t, sig);
  }

  Word random_word(std::size_t max_len) {
    std::vector<std::string> objects(sig.objects.begin(), sig.objects.end());
    Word w;
    auto len = below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back({objects[below(objects.size())], allow_duals && chance(0.3)});
    }
    return w;
  }
};

inline std::size_t node_count(const TypedTerm& t, const TeleologicalSignature& s) {
  return elaborate(t, expand_signature(s)).nodes.size();
}

// ---------------------------------------------------------------- rewrite corpus

// Signature used by the coherence corpus.
inline TeleologicalSignature corpus_signature() {
  TeleologicalSignature s;
  s.objects = {"a", "b"};
  s.morphisms = {
      {"f", W({"a"}), W({"b"}), true},
      {"g", W({"b"}), W({"a", "b"}), true},
      {"h", W({"a", "b"}), W({"a"}), false},
      {"k", W({"b*"}), W({"a"}), true},
      {"m", W({"a"}), {}, false},
      {"n", {}, W({"b*"}), true},
      {"s", W({"a*"}), W({"b"}), false},
  };
  return s;
}

struct RewritePair {
  std::string rule;
  TypedTerm lhs;
  TypedTerm rhs;
};

// Wraps both sides in the same random context: (L | t | R) ; post, with an
// optional symmetry in front.
inline std::pair<TypedTerm, TypedTerm> in_context(const TypedTerm& lhs, const TypedTerm& rhs,
                                                  TermGenerator& gen_) {
  const auto& sig = gen_.sig;
  auto left = gen_.term(gen_.random_word(1), gen_.below(2));
  auto right = gen_.term(gen_.random_word(1), gen_.below(2));
  auto wrap = [&](const TypedTerm& t) {
    return tensor(tensor(left.term, t.term), right.term);
  };
  Word mid = concat(concat(left.cod, lhs.cod), right.cod);
  auto post = gen_.term(mid, 1 + gen_.below(2));
  TermPtr l = comp(wrap(lhs), post.term);
  TermPtr r = comp(wrap(rhs), post.term);
  if (gen_.chance(0.3) && !left.dom.empty() && !lhs.dom.empty()) {
    auto pre = sym(lhs.dom, left.dom);
    // sym(A ; L) ; (L | t | R) needs the left block first
    l = comp(tensor(pre, id(right.dom)), l);
    r = comp(tensor(pre, id(right.dom)), r);
  }
  return {typecheck(l, sig), typecheck(r, sig)};
}

// Random dualisable cap-free term on a random nonempty word.
inline TypedTerm random_dualisable(TermGenerator& g, std::size_t layers) {
  auto saved = std::tuple(g.allow_caps, g.dualisable_only);
  g.allow_caps = false;
  g.dualisable_only = true;
  Word dom;
  while (dom.empty()) dom = g.random_word(2);
  auto t = g.term(dom, layers);
  std::tie(g.allow_caps, g.dualisable_only) = saved;
  return t;
}

// Most wires alive at once while folding g in its default node order.
inline std::size_t live_width(const CircuitGraph& g) {
  std::vector<bool> done(g.nodes.size(), false);
  auto live = [&] {
    std::size_t n = 0;
    for (const auto& e : g.edges) {
      bool started = e.source.is_boundary() || done[e.source.node];
      bool finished = !e.target.is_boundary() && done[e.target.node];
      n += started && !finished;
    }
    return n;
  };
  auto widest = live();
  for (auto n : topological_order(g)) {
    done[n] = true;
    widest = std::max(widest, live());
  }
  return widest;
}

// Rewrite pairs whose sides never have more than max_wires wires alive.
inline std::vector<RewritePair> rewrite_corpus(std::size_t per_rule, std::uint64_t seed,
                                               std::size_t max_wires = 5) {
  auto sig = corpus_signature();
  std::mt19937_64 rng(seed);
  TermGenerator g{sig, rng};
  g.max_width = 4;
  std::vector<RewritePair> out;
  auto small = [&](std::size_t max_len) {
    auto t = g.term(g.random_word(max_len), 1 + g.below(2));
    return t;
  };
  auto m = expand_signature(sig);
  auto narrow = [&](const TypedTerm& t) { return live_width(elaborate(t, m)) <= max_wires; };
  using Sides = std::pair<TypedTerm, TypedTerm>;
  // instances and contexts are redrawn until both sides stay narrow enough
  // to evaluate
  auto push = [&](const std::string& rule, auto make) {
    while (true) {
      Sides base = make();
      auto [cl, cr] = in_context(base.first, base.second, g);
      if (narrow(cl) && narrow(cr)) {
        out.push_back({rule, cl, cr});
        return;
      }
    }
  };
  auto nonempty = [&](std::size_t max_len) {
    Word w;
    while (w.empty()) w = g.random_word(max_len);
    return w;
  };
  for (std::size_t i = 0; i < per_rule; ++i) {
    push("interchange", [&] {
      auto f = small(2), h = small(2);
      return Sides{typecheck(comp(tensor(f.term, id(h.dom)), tensor(id(f.cod), h.term)), sig),
                   typecheck(comp(tensor(id(f.dom), h.term), tensor(f.term, id(h.cod))), sig)};
    });
    push("symmetry-naturality", [&] {
      auto f = small(2), h = small(2);
      return Sides{typecheck(comp(tensor(f.term, h.term), sym(f.cod, h.cod)), sig),
                   typecheck(comp(sym(f.dom, h.dom), tensor(h.term, f.term)), sig)};
    });
    push("counit-law", [&] {
      auto q = random_dualisable(g, 1 + g.below(2));
      return Sides{typecheck(comp(tensor(q.term, id(word_dual(q.cod))), cup(q.cod)), sig),
                   typecheck(comp(tensor(id(q.dom), dual_syntax(q.term)), cup(q.dom)), sig)};
    });
    push("counit-twist", [&] {
      auto x = nonempty(2);
      return Sides{typecheck(cup(word_dual(x)), sig),
                   typecheck(comp(sym(word_dual(x), x), cup(x)), sig)};
    });
    push("counit-tensor", [&] {
      auto v = nonempty(2), w = nonempty(2);
      return Sides{typecheck(cup(concat(v, w)), sig),
                   typecheck(comp(tensor(tensor(id(v), sym(w, word_dual(v))), id(word_dual(w))),
                                  tensor(cup(v), cup(w))),
                             sig)};
    });
  }
  return out;
}

// ---------------------------------------------------------------- valuations

inline Valuation<LensCategory> random_lens_valuation(const TeleologicalSignature& s,
                                                     std::mt19937_64& rng, std::size_t bound) {
  Valuation<LensCategory> val;
  std::uniform_int_distribution<std::size_t> size(1, bound);
  for (const auto& x : s.objects) val.objects[x] = {numbered_set(size(rng)), numbered_set(size(rng))};
  for (const auto& m : s.morphisms) {
    auto dom = eval_word<LensCategory>(m.dom, val), cod = eval_word<LensCategory>(m.cod, val);
    val.morphisms[m.name] = m.dualisable ? random_adaptor(dom, cod, rng) : random_lens(dom, cod, rng);
  }
  return val;
}

inline Valuation<RelCategory> random_rel_valuation(const TeleologicalSignature& s,
                                                   std::mt19937_64& rng, std::size_t bound) {
  Valuation<RelCategory> val;
  std::uniform_int_distribution<std::size_t> size(1, bound);
  for (const auto& x : s.objects) val.objects[x] = numbered_set(size(rng));
  for (const auto& m : s.morphisms) {
    auto dom = eval_word<RelCategory>(m.dom, val), cod = eval_word<RelCategory>(m.cod, val);
    val.morphisms[m.name] = random_relation(dom, cod, rng);
  }
  return val;
}

// ---------------------------------------------------------------- deviation oracle

// Pure equilibria of the two-player game read straight from the payoff
// table: player 1 picks x, player 2 picks a move for each thing it can
// observe (nothing, x itself, or x's class). A profile is indexed as
// x * |Y|^k + the moves read as base-|Y| digits, first observation most
// significant. Kept independent of ClassicalGame and the composed game.
inline std::vector<std::size_t> deviation_equilibria(Fig1Variant variant, const Fig1Spec& spec) {
  auto nx = spec.x.size(), ny = spec.y.size();
  std::vector<std::size_t> observed(nx, 0);  // x -> observation
  std::size_t k = 1;
  if (variant == Fig1Variant::sequential) {
    k = nx;
    for (std::size_t x = 0; x < nx; ++x) observed[x] = x;
  } else if (variant == Fig1Variant::imperfect) {
    k = spec.partition->size();
    for (std::size_t c = 0; c < k; ++c) {
      for (const auto& name : (*spec.partition)[c]) observed[*spec.x.index_of(name)] = c;
    }
  }
  std::size_t plans = 1;
  for (std::size_t i = 0; i < k; ++i) plans *= ny;
  auto move = [&](std::size_t plan, std::size_t obs) {
    for (std::size_t i = obs + 1; i < k; ++i) plan /= ny;
    return plan % ny;
  };
  auto outcome = [&](std::size_t x, std::size_t plan) {
    return spec.payoffs[x][move(plan, observed[x])];
  };
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t plan = 0; plan < plans; ++plan) {
      auto [u1, u2] = outcome(x, plan);
      bool stable = true;
      for (std::size_t x2 = 0; x2 < nx && stable; ++x2) stable = outcome(x2, plan).first <= u1;
      for (std::size_t p2 = 0; p2 < plans && stable; ++p2) stable = outcome(x, p2).second <= u2;
      if (stable) out.push_back(x * plans + plan);
    }
  }
  return out;
}

}  // namespace support

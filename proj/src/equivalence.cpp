#include "teleo/equivalence.hpp"

#include <algorithm>
#include <map>

namespace teleo {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::string letters(const Word& w) {
  std::string out;
  for (const auto& l : w) out += l.to_string() + ",";
  return out;
}

char mark(Variance v) { return v == Variance::covariant ? '+' : '-'; }

// Breadth-first numbering along ordered ports; the same walk on an
// isomorphic graph visits corresponding nodes in the same order.
struct Walk {
  const CircuitGraph& g;
  const GraphIndex& idx;
  std::vector<std::size_t> local;
  std::vector<std::size_t> order;

  Walk(const CircuitGraph& graph, const GraphIndex& index)
      : g(graph), idx(index), local(graph.nodes.size(), kUnseen) {}

  void discover(std::size_t n) {
    if (local[n] != kUnseen) return;
    local[n] = order.size();
    order.push_back(n);
  }

  void run() {
    for (std::size_t head = 0; head < order.size(); ++head) {
      auto n = order[head];
      for (auto e : idx.node_in[n]) {
        if (!g.edges[e].source.is_boundary()) discover(g.edges[e].source.node);
      }
      for (auto e : idx.node_out[n]) {
        if (!g.edges[e].target.is_boundary()) discover(g.edges[e].target.node);
      }
    }
  }

  std::string source_ref(const Edge& e) const {
    std::string s = e.source.is_boundary()
                        ? "I" + std::to_string(e.source.port)
                        : "n" + std::to_string(local[e.source.node]) + "." +
                              std::to_string(e.source.port);
    s += mark(e.source_variance);
    s += mark(e.target_variance);
    s += e.object.to_string();
    return s;
  }

  // Each edge is written once, at its target.
  std::string nodes_text(std::size_t from = 0) const {
    std::string out;
    for (std::size_t k = from; k < order.size(); ++k) {
      const auto& node = g.nodes[order[k]];
      out += "[" + node.label + "/" + std::to_string(node.parity) + "/" + letters(node.inputs) +
             "/" + letters(node.outputs) + ":";
      for (auto e : idx.node_in[order[k]]) out += source_ref(g.edges[e]) + " ";
      out += "]";
    }
    return out;
  }
};

std::vector<std::size_t> refine_colors(const CircuitGraph& g, const GraphIndex& idx) {
  auto n = g.nodes.size();
  std::vector<std::size_t> color(n, 0);
  {
    std::map<std::string, std::size_t> rank;
    std::vector<std::string> seed(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& node = g.nodes[i];
      seed[i] = node.label + "/" + std::to_string(node.parity) + "/" + letters(node.inputs) + "/" +
                letters(node.outputs);
      rank[seed[i]] = 0;
    }
    std::size_t r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (std::size_t i = 0; i < n; ++i) color[i] = rank[seed[i]];
  }
  auto ref = [&](const PortRef& p, bool as_source) -> std::pair<long long, long long> {
    if (p.is_boundary()) return {as_source ? -2 : -3, static_cast<long long>(p.port)};
    return {static_cast<long long>(color[p.node]), static_cast<long long>(p.port)};
  };
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<long long>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].push_back(static_cast<long long>(color[i]));
      for (auto e : idx.node_in[i]) {
        auto [c, p] = ref(g.edges[e].source, true);
        sig[i].push_back(c);
        sig[i].push_back(p);
      }
      for (auto e : idx.node_out[i]) {
        auto [c, p] = ref(g.edges[e].target, false);
        sig[i].push_back(c);
        sig[i].push_back(p);
      }
    }
    std::map<std::vector<long long>, std::size_t> rank;
    for (const auto& s : sig) rank[s] = 0;
    std::size_t r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (std::size_t i = 0; i < n; ++i) color[i] = rank[sig[i]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return color;
}

}  // namespace

CanonicalForm canonical_form(const CircuitGraph& g) {
  auto idx = index_graph(g);
  std::string out = "in:" + letters(g.inputs) + " out:" + letters(g.outputs) + " ";

  Walk anchored(g, idx);
  for (auto e : idx.boundary_in) {
    if (!g.edges[e].target.is_boundary()) anchored.discover(g.edges[e].target.node);
  }
  for (auto e : idx.boundary_out) {
    if (!g.edges[e].source.is_boundary()) anchored.discover(g.edges[e].source.node);
  }
  anchored.run();
  out += anchored.nodes_text();
  out += " outputs:";
  for (auto e : idx.boundary_out) out += anchored.source_ref(g.edges[e]) + " ";

  if (anchored.order.size() == g.nodes.size()) return {out};

  // Floating components: each is rigid once one node is fixed, so take the
  // least certificate over starts from the smallest refined colour class.
  auto color = refine_colors(g, idx);
  std::vector<std::size_t> component(g.nodes.size(), kUnseen);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (anchored.local[n] != kUnseen || component[n] != kUnseen) continue;
    Walk w(g, idx);
    w.discover(n);
    w.run();
    for (auto m : w.order) component[m] = members.size();
    members.push_back(w.order);
  }
  std::vector<std::string> certificates;
  for (const auto& nodes : members) {
    std::map<std::size_t, std::size_t> count;
    for (auto n : nodes) ++count[color[n]];
    auto best = std::min_element(count.begin(), count.end(), [](const auto& a, const auto& b) {
      return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    std::string least;
    bool first = true;
    for (auto n : nodes) {
      if (color[n] != best->first) continue;
      Walk w(g, idx);
      w.discover(n);
      w.run();
      auto text = w.nodes_text();
      if (first || text < least) least = std::move(text);
      first = false;
    }
    certificates.push_back(std::move(least));
  }
  std::sort(certificates.begin(), certificates.end());
  out += " floating:";
  for (const auto& c : certificates) out += "{" + c + "}";
  return {out};
}

bool circuit_iso(const CircuitGraph& a, const CircuitGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  if (a.inputs != b.inputs || a.outputs != b.outputs) return false;
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------- reflection

namespace {

Node counit_node(const std::string& symbol) {
  SignedObject x{symbol, false};
  return Node{counit_label(symbol), symbol, SymbolKind::counit, false, 0, Word{x, x.dual()}, Word{}};
}

[[noreturn]] void infeasible(const std::string& why) {
  throw Error(ErrorCode::infeasible_subset, why);
}

}  // namespace

CircuitGraph reflect_subset(const CircuitGraph& g, const ReflectionSubset& r) {
  if (r.empty()) return g;
  for (auto n : r) {
    if (n >= g.nodes.size()) infeasible("node " + std::to_string(n) + " does not exist");
    const auto& node = g.nodes[n];
    if (node.kind == SymbolKind::counit || !node.dualisable) {
      infeasible("node " + std::to_string(n) + " (" + node.label + ") is not reflectable");
    }
  }
  auto idx = index_graph(g);
  auto in_r = [&](const PortRef& p) { return !p.is_boundary() && r.contains(p.node); };

  std::vector<Node> nodes = g.nodes;
  for (auto n : r) nodes[n] = reflect_node(g.nodes[n]);
  std::vector<bool> removed(g.nodes.size(), false);
  std::vector<Edge> edges;
  std::vector<bool> consumed(g.edges.size(), false);

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (consumed[e]) continue;
    const auto& edge = g.edges[e];
    bool s_in = in_r(edge.source), t_in = in_r(edge.target);
    if (s_in && t_in) {
      edges.push_back(make_edge(edge.target, edge.source, edge.object.dual()));
    } else if (!s_in && t_in) {
      // both ends become outputs: close them with a cap
      std::size_t eps = nodes.size();
      nodes.push_back(counit_node(edge.object.symbol));
      PortRef reflected{edge.target.node, edge.target.port};
      auto outside_port = edge.object.starred ? 1u : 0u;
      edges.push_back(make_edge(edge.source, {eps, outside_port}, edge.object));
      edges.push_back(make_edge(reflected, {eps, 1 - outside_port}, edge.object.dual()));
    } else if (s_in && !t_in) {
      if (edge.target.is_boundary() || g.nodes[edge.target.node].kind != SymbolKind::counit) {
        infeasible("edge " + std::to_string(e) + " leaves the subset forwards");
      }
      auto m = edge.target.node;
      auto other = idx.node_in[m][1 - edge.target.port];
      const auto& partner = g.edges[other];
      if (in_r(partner.source)) {
        infeasible("counit node " + std::to_string(m) + " joins two reflected nodes");
      }
      if (consumed[other]) infeasible("counit node " + std::to_string(m) + " is used twice");
      removed[m] = true;
      consumed[other] = true;
      // the cap straightens into a wire entering the reflected node
      edges.push_back(make_edge(partner.source, {edge.source.node, edge.source.port},
                                edge.object.dual()));
    } else {
      bool into_removed = !edge.target.is_boundary() && removed[edge.target.node];
      if (!into_removed) edges.push_back(edge);
    }
  }
  // An edge into a counit may precede the edge that removes it.
  std::vector<Edge> kept;
  for (auto& e : edges) {
    if (!e.target.is_boundary() && e.target.node < g.nodes.size() && removed[e.target.node]) {
      continue;
    }
    kept.push_back(std::move(e));
  }

  std::vector<std::size_t> remap(nodes.size(), kUnseen);
  CircuitGraph out;
  out.inputs = g.inputs;
  out.outputs = g.outputs;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (n < g.nodes.size() && removed[n]) continue;
    remap[n] = out.nodes.size();
    out.nodes.push_back(nodes[n]);
  }
  for (auto& e : kept) {
    if (!e.source.is_boundary()) e.source.node = remap[e.source.node];
    if (!e.target.is_boundary()) e.target.node = remap[e.target.node];
    out.edges.push_back(std::move(e));
  }
  auto report = validate_graph(out);
  if (!report.ok()) {
    infeasible("reflection is not a valid diagram: " + report.issues.front().message);
  }
  return out;
}

bool is_feasible(const CircuitGraph& g, const ReflectionSubset& r) {
  try {
    reflect_subset(g, r);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::infeasible_subset) return false;
    throw;
  }
}

// ---------------------------------------------------------------- ≅_t

namespace {

struct SymbolCount {
  std::vector<std::size_t> plain;     // nodes drawn as f
  std::vector<std::size_t> reflected;  // nodes drawn as f*
};

std::map<std::string, SymbolCount> reflectable(const CircuitGraph& g) {
  std::map<std::string, SymbolCount> out;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto& node = g.nodes[n];
    if (node.kind == SymbolKind::counit || !node.dualisable) continue;
    auto& c = out[node.symbol];
    (node.kind == SymbolKind::generator ? c.plain : c.reflected).push_back(n);
  }
  return out;
}

std::multiset<std::string> fixed_labels(const CircuitGraph& g) {
  std::multiset<std::string> out;
  for (const auto& node : g.nodes) {
    if (node.kind != SymbolKind::counit && !node.dualisable) out.insert(node.label);
  }
  return out;
}

void subsets_of_size(const std::vector<std::size_t>& pool, std::size_t k,
                     std::vector<ReflectionSubset>& out) {
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  // prev_permutation over a sorted-descending mask enumerates in lexicographic order
  do {
    ReflectionSubset s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) s.insert(pool[i]);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

std::optional<ReflectionSubset> teleo_witness(const CircuitGraph& a, const CircuitGraph& b) {
  if (a.inputs != b.inputs || a.outputs != b.outputs) return std::nullopt;
  if (fixed_labels(a) != fixed_labels(b)) return std::nullopt;

  auto ra = reflectable(a), rb = reflectable(b);
  std::set<std::string> symbols;
  for (const auto& [s, c] : ra) symbols.insert(s);
  for (const auto& [s, c] : rb) symbols.insert(s);

  // Per symbol, the ways to flip k plain and j reflected nodes of a so that
  // the counts of f and f* match b.
  std::vector<std::vector<ReflectionSubset>> choices;
  for (const auto& s : symbols) {
    const auto& ca = ra[s];
    const auto& cb = rb[s];
    auto p = static_cast<long>(ca.plain.size()), q = static_cast<long>(ca.reflected.size());
    auto pb = static_cast<long>(cb.plain.size()), qb = static_cast<long>(cb.reflected.size());
    if (p + q != pb + qb) return std::nullopt;
    std::vector<ReflectionSubset> options;
    for (long k = 0; k <= p; ++k) {
      long j = pb - p + k;
      if (j < 0 || j > q) continue;
      std::vector<ReflectionSubset> flip_plain, flip_reflected;
      subsets_of_size(ca.plain, static_cast<std::size_t>(k), flip_plain);
      subsets_of_size(ca.reflected, static_cast<std::size_t>(j), flip_reflected);
      for (const auto& x : flip_plain) {
        for (const auto& y : flip_reflected) {
          ReflectionSubset u = x;
          u.insert(y.begin(), y.end());
          options.push_back(std::move(u));
        }
      }
    }
    if (options.empty()) return std::nullopt;
    choices.push_back(std::move(options));
  }

  std::vector<ReflectionSubset> candidates{{}};
  for (const auto& options : choices) {
    std::vector<ReflectionSubset> next;
    for (const auto& base : candidates) {
      for (const auto& o : options) {
        ReflectionSubset u = base;
        u.insert(o.begin(), o.end());
        next.push_back(std::move(u));
      }
    }
    candidates = std::move(next);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });

  auto target = canonical_form(b);
  for (const auto& r : candidates) {
    CircuitGraph reflected;
    try {
      reflected = reflect_subset(a, r);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::infeasible_subset) continue;
      throw;
    }
    if (reflected.nodes.size() != b.nodes.size() || reflected.edges.size() != b.edges.size()) {
      continue;
    }
    if (canonical_form(reflected) == target) return r;
  }
  return std::nullopt;
}

bool teleo_eq(const CircuitGraph& a, const CircuitGraph& b) {
  return teleo_witness(a, b).has_value();
}

}  // namespace teleo

#include "teleo/circuit_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace teleo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string edge_name(std::size_t e) { return "edge " + std::to_string(e); }
std::string node_name(const CircuitGraph& g, std::size_t n) {
  return "node " + std::to_string(n) + " (" + g.nodes[n].label + ")";
}

// Fills the index; reports the first structural problem into `report`.
bool build_index(const CircuitGraph& g, GraphIndex& idx, ValidationReport& report) {
  idx.node_in.assign(g.nodes.size(), {});
  idx.node_out.assign(g.nodes.size(), {});
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    idx.node_in[n].assign(g.nodes[n].inputs.size(), kNone);
    idx.node_out[n].assign(g.nodes[n].outputs.size(), kNone);
  }
  idx.boundary_in.assign(g.inputs.size(), kNone);
  idx.boundary_out.assign(g.outputs.size(), kNone);

  auto claim = [&](std::size_t& slot, std::size_t e, const std::string& what) {
    if (slot != kNone) {
      report.add(ErrorCode::invalid_graph, edge_name(e),
                 "port degree: " + what + " already has edge " + std::to_string(slot));
      return false;
    }
    slot = e;
    return true;
  };

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.source.is_boundary()) {
      if (edge.source.port >= g.inputs.size()) {
        report.add(ErrorCode::invalid_graph, edge_name(e), "arity: no such boundary input");
        return false;
      }
      if (!claim(idx.boundary_in[edge.source.port], e,
                 "boundary input " + std::to_string(edge.source.port)))
        return false;
    } else {
      if (edge.source.node >= g.nodes.size() ||
          edge.source.port >= g.nodes[edge.source.node].outputs.size()) {
        report.add(ErrorCode::invalid_graph, edge_name(e), "arity: no such output port");
        return false;
      }
      if (!claim(idx.node_out[edge.source.node][edge.source.port], e,
                 node_name(g, edge.source.node) + " output " + std::to_string(edge.source.port)))
        return false;
    }
    if (edge.target.is_boundary()) {
      if (edge.target.port >= g.outputs.size()) {
        report.add(ErrorCode::invalid_graph, edge_name(e), "arity: no such boundary output");
        return false;
      }
      if (!claim(idx.boundary_out[edge.target.port], e,
                 "boundary output " + std::to_string(edge.target.port)))
        return false;
    } else {
      if (edge.target.node >= g.nodes.size() ||
          edge.target.port >= g.nodes[edge.target.node].inputs.size()) {
        report.add(ErrorCode::invalid_graph, edge_name(e), "arity: no such input port");
        return false;
      }
      if (!claim(idx.node_in[edge.target.node][edge.target.port], e,
                 node_name(g, edge.target.node) + " input " + std::to_string(edge.target.port)))
        return false;
    }
  }

  for (std::size_t i = 0; i < idx.boundary_in.size(); ++i) {
    if (idx.boundary_in[i] == kNone) {
      report.add(ErrorCode::invalid_graph, "boundary input " + std::to_string(i),
                 "boundary degree: boundary port has no edge");
      return false;
    }
  }
  for (std::size_t j = 0; j < idx.boundary_out.size(); ++j) {
    if (idx.boundary_out[j] == kNone) {
      report.add(ErrorCode::invalid_graph, "boundary output " + std::to_string(j),
                 "boundary degree: boundary port has no edge");
      return false;
    }
  }
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    for (std::size_t p = 0; p < idx.node_in[n].size(); ++p) {
      if (idx.node_in[n][p] == kNone) {
        report.add(ErrorCode::invalid_graph, node_name(g, n),
                   "arity: input port " + std::to_string(p) + " has no edge");
        return false;
      }
    }
    for (std::size_t p = 0; p < idx.node_out[n].size(); ++p) {
      if (idx.node_out[n][p] == kNone) {
        report.add(ErrorCode::invalid_graph, node_name(g, n),
                   "arity: output port " + std::to_string(p) + " has no edge");
        return false;
      }
    }
  }
  return true;
}

const SignedObject& source_letter(const CircuitGraph& g, const PortRef& p) {
  return p.is_boundary() ? g.inputs[p.port] : g.nodes[p.node].outputs[p.port];
}
const SignedObject& target_letter(const CircuitGraph& g, const PortRef& p) {
  return p.is_boundary() ? g.outputs[p.port] : g.nodes[p.node].inputs[p.port];
}

std::vector<std::vector<std::size_t>> successors(const CircuitGraph& g) {
  std::vector<std::vector<std::size_t>> succ(g.nodes.size());
  for (const auto& e : g.edges) {
    if (!e.source.is_boundary() && !e.target.is_boundary()) {
      succ[e.source.node].push_back(e.target.node);
    }
  }
  return succ;
}

std::optional<std::vector<std::size_t>> kahn(const CircuitGraph& g, TieBreak tie) {
  auto succ = successors(g);
  std::vector<std::size_t> indegree(g.nodes.size(), 0);
  for (const auto& out : succ) {
    for (auto t : out) ++indegree[t];
  }
  std::vector<std::size_t> ready;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (indegree[n] == 0) ready.push_back(n);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto it = tie == TieBreak::smallest_first ? std::min_element(ready.begin(), ready.end())
                                              : std::max_element(ready.begin(), ready.end());
    auto n = *it;
    ready.erase(it);
    order.push_back(n);
    for (auto t : succ[n]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  if (order.size() != g.nodes.size()) return std::nullopt;
  return order;
}

}  // namespace

Edge make_edge(PortRef source, PortRef target, SignedObject object) {
  auto v = variance_of(object);
  return Edge{source, target, std::move(object), v, v};
}

GraphIndex index_graph(const CircuitGraph& g) {
  GraphIndex idx;
  ValidationReport report;
  if (!build_index(g, idx, report)) {
    const auto& issue = report.issues.front();
    throw Error(ErrorCode::invalid_graph, issue.subject + ": " + issue.message);
  }
  return idx;
}

// ---------------------------------------------------------------- elaboration

namespace {

CircuitGraph single_node(Node node) {
  CircuitGraph g;
  g.inputs = node.inputs;
  g.outputs = node.outputs;
  for (std::size_t i = 0; i < node.inputs.size(); ++i) {
    g.edges.push_back(make_edge({kBoundary, i}, {0, i}, node.inputs[i]));
  }
  for (std::size_t j = 0; j < node.outputs.size(); ++j) {
    g.edges.push_back(make_edge({0, j}, {kBoundary, j}, node.outputs[j]));
  }
  g.nodes.push_back(std::move(node));
  return g;
}

Node node_for(const MonoidalMorphism& m, int parity) {
  return Node{m.name, m.symbol, m.kind, m.dualisable, parity, m.dom, m.cod};
}

PortRef shift(PortRef p, std::size_t node_offset, std::size_t boundary_offset) {
  if (p.is_boundary()) return {kBoundary, p.port + boundary_offset};
  return {p.node + node_offset, p.port};
}

CircuitGraph juxtapose(CircuitGraph a, const CircuitGraph& b) {
  auto offset = a.nodes.size();
  auto in_offset = a.inputs.size();
  auto out_offset = a.outputs.size();
  a.nodes.insert(a.nodes.end(), b.nodes.begin(), b.nodes.end());
  for (auto e : b.edges) {
    e.source = shift(e.source, offset, in_offset);
    e.target = shift(e.target, offset, out_offset);
    a.edges.push_back(std::move(e));
  }
  a.inputs = concat(a.inputs, b.inputs);
  a.outputs = concat(a.outputs, b.outputs);
  return a;
}

CircuitGraph sequence(const CircuitGraph& a, const CircuitGraph& b) {
  CircuitGraph g;
  g.nodes = a.nodes;
  g.nodes.insert(g.nodes.end(), b.nodes.begin(), b.nodes.end());
  g.inputs = a.inputs;
  g.outputs = b.outputs;
  auto offset = a.nodes.size();

  // source feeding each output of a; target fed by each input of b
  std::vector<PortRef> feeding(a.outputs.size());
  for (const auto& e : a.edges) {
    if (e.target.is_boundary()) {
      feeding[e.target.port] = e.source;
    } else {
      g.edges.push_back(e);
    }
  }
  for (const auto& e : b.edges) {
    PortRef target = shift(e.target, offset, 0);
    if (e.source.is_boundary()) {
      g.edges.push_back(make_edge(feeding[e.source.port], target, e.object));
    } else {
      g.edges.push_back(Edge{shift(e.source, offset, 0), target, e.object, e.source_variance,
                             e.target_variance});
    }
  }
  return g;
}

CircuitGraph build(const Term& t, const MonoidalSignature& m) {
  auto lookup = [&](const std::string& name) -> const MonoidalMorphism& {
    const auto* decl = m.find(name);
    if (!decl) throw Error(ErrorCode::unknown_symbol, "'" + name + "' is not in M(Σ)");
    return *decl;
  };
  return std::visit(
      overloaded{
          [&](const ast::Gen& x) { return single_node(node_for(lookup(x.name), 0)); },
          [&](const ast::GenDual& x) {
            return single_node(node_for(lookup(dual_label(x.name)), 1));
          },
          [&](const ast::Id& x) {
            CircuitGraph g;
            g.inputs = g.outputs = x.word;
            for (std::size_t i = 0; i < x.word.size(); ++i) {
              g.edges.push_back(make_edge({kBoundary, i}, {kBoundary, i}, x.word[i]));
            }
            return g;
          },
          [&](const ast::Sym& x) {
            CircuitGraph g;
            g.inputs = concat(x.left, x.right);
            g.outputs = concat(x.right, x.left);
            auto nl = x.left.size(), nr = x.right.size();
            for (std::size_t i = 0; i < nl; ++i) {
              g.edges.push_back(make_edge({kBoundary, i}, {kBoundary, nr + i}, x.left[i]));
            }
            for (std::size_t j = 0; j < nr; ++j) {
              g.edges.push_back(make_edge({kBoundary, nl + j}, {kBoundary, j}, x.right[j]));
            }
            return g;
          },
          [&](const ast::Cup& x) {
            CircuitGraph g;
            auto n = x.word.size();
            g.inputs = concat(x.word, word_dual(x.word));
            for (std::size_t i = 0; i < n; ++i) {
              const auto& letter = x.word[i];
              g.nodes.push_back(node_for(lookup(counit_label(letter.symbol)), 0));
              // ε_x takes x then x*; a starred letter enters in swapped order
              std::size_t plain = letter.starred ? n + i : i;
              std::size_t starred = letter.starred ? i : n + i;
              g.edges.push_back(make_edge({kBoundary, plain}, {i, 0}, g.inputs[plain]));
              g.edges.push_back(make_edge({kBoundary, starred}, {i, 1}, g.inputs[starred]));
            }
            return g;
          },
          [&](const ast::Comp& x) { return sequence(build(*x.first, m), build(*x.second, m)); },
          [&](const ast::Tensor& x) {
            return juxtapose(build(*x.left, m), build(*x.right, m));
          },
      },
      t.node);
}

}  // namespace

CircuitGraph elaborate(const TypedTerm& t, const MonoidalSignature& m) {
  return build(*t.term, m);
}

// ---------------------------------------------------------------- validation

ValidationReport validate_graph(const CircuitGraph& g) {
  ValidationReport report;
  GraphIndex idx;
  if (!build_index(g, idx, report)) return report;

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (source_letter(g, edge.source) != edge.object ||
        target_letter(g, edge.target) != edge.object) {
      report.add(ErrorCode::invalid_graph, edge_name(e),
                 "arity: edge object " + edge.object.to_string() +
                     " does not match its port letters");
      return report;
    }
  }

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    // A starred wire runs backwards in time, so its teleological source is the
    // circuit target.
    auto from = edge.object.starred ? edge.target_variance : edge.source_variance;
    auto to = edge.object.starred ? edge.source_variance : edge.target_variance;
    if (from == Variance::contravariant && to == Variance::covariant) {
      report.add(ErrorCode::invalid_graph, edge_name(e),
                 "forbidden variance: edge runs from a contravariant to a covariant connection");
      return report;
    }
    if (edge.source_variance != variance_of(edge.object) ||
        edge.target_variance != variance_of(edge.object)) {
      report.add(ErrorCode::invalid_graph, edge_name(e),
                 "variance mark: marks disagree with wire orientation of " +
                     edge.object.to_string());
      return report;
    }
  }

  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto& node = g.nodes[n];
    bool reflected = node.kind == SymbolKind::dual_generator;
    if (node.parity != (reflected ? 1 : 0)) {
      report.add(ErrorCode::invalid_graph, node_name(g, n), "parity: parity disagrees with label");
      return report;
    }
  }

  if (!kahn(g, TieBreak::smallest_first)) {
    report.add(ErrorCode::invalid_graph, "precedence digraph",
               "acyclicity: precedence digraph has a cycle");
  }
  return report;
}

ValidationReport validate_graph(const CircuitGraph& g, const MonoidalSignature& m) {
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto& node = g.nodes[n];
    const auto* decl = m.find(node.label);
    ValidationReport report;
    if (!decl) {
      report.add(ErrorCode::invalid_graph, node_name(g, n), "label: not in M(Σ)");
      return report;
    }
    if (decl->dom != node.inputs || decl->cod != node.outputs) {
      report.add(ErrorCode::invalid_graph, node_name(g, n),
                 "arity: ports do not match the type of " + node.label);
      return report;
    }
  }
  return validate_graph(g);
}

// ---------------------------------------------------------------- reflection & dual

Node reflect_node(const Node& n) {
  if (n.kind == SymbolKind::counit || !n.dualisable) {
    throw Error(ErrorCode::not_dualisable, "node '" + n.label + "' cannot be reflected");
  }
  Node out = n;
  bool to_dual = n.kind == SymbolKind::generator;
  out.kind = to_dual ? SymbolKind::dual_generator : SymbolKind::generator;
  out.label = to_dual ? dual_label(n.symbol) : n.symbol;
  out.parity = 1 - n.parity;
  out.inputs = word_dual(n.outputs);
  out.outputs = word_dual(n.inputs);
  return out;
}

CircuitGraph dual_graph(const CircuitGraph& g) {
  CircuitGraph out;
  for (const auto& n : g.nodes) out.nodes.push_back(reflect_node(n));
  out.inputs = word_dual(g.outputs);
  out.outputs = word_dual(g.inputs);
  // An input port p of a node becomes output port p and vice versa, so each
  // edge is reversed without renumbering ports.
  for (const auto& e : g.edges) {
    out.edges.push_back(make_edge(e.target, e.source, e.object.dual()));
  }
  return out;
}

std::vector<std::size_t> topological_order(const CircuitGraph& g, TieBreak tie) {
  auto order = kahn(g, tie);
  if (!order) throw Error(ErrorCode::invalid_graph, "precedence digraph has a cycle");
  return *order;
}

bool is_topological_order(const CircuitGraph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.nodes.size()) return false;
  std::vector<std::size_t> position(g.nodes.size(), kNone);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.nodes.size() || position[order[i]] != kNone) return false;
    position[order[i]] = i;
  }
  for (const auto& e : g.edges) {
    if (e.source.is_boundary() || e.target.is_boundary()) continue;
    if (position[e.source.node] >= position[e.target.node]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- DOT

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\' || c == '{' || c == '}' || c == '|' || c == '<' || c == '>') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string record(const std::string& prefix, const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "|";
    out += "<" + prefix + std::to_string(i) + "> " + escape(w[i].to_string());
  }
  return out;
}

std::string endpoint(const PortRef& p, bool as_source) {
  if (p.is_boundary()) {
    return as_source ? "inputs:i" + std::to_string(p.port) : "outputs:o" + std::to_string(p.port);
  }
  return "n" + std::to_string(p.node);
}

}  // namespace

std::string render_dot(const CircuitGraph& g) {
  std::ostringstream out;
  out << "digraph circuit {\n";
  out << "  rankdir=LR;\n";
  out << "  inputs [shape=record,label=\"" << record("i", g.inputs) << "\"];\n";
  out << "  outputs [shape=record,label=\"" << record("o", g.outputs) << "\"];\n";
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto& node = g.nodes[n];
    out << "  n" << n << " [shape=box,label=\"" << escape(node.label) << "\\nparity "
        << node.parity << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << endpoint(e.source, true) << " -> " << endpoint(e.target, false)
        << " [label=\"" << escape(e.object.to_string()) << "\"";
    if (!e.source.is_boundary()) out << ",taillabel=\"" << e.source.port << "\"";
    if (!e.target.is_boundary()) out << ",headlabel=\"" << e.target.port << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace teleo

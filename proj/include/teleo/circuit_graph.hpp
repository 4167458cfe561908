#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "teleo/signature.hpp"
#include "teleo/term.hpp"

namespace teleo {

enum class Variance { covariant, contravariant };

/// A port letter is covariant exactly when it is unstarred: the wire it
/// carries points forward in time at that node.
inline Variance variance_of(const SignedObject& letter) {
  return letter.starred ? Variance::contravariant : Variance::covariant;
}

inline constexpr std::size_t kBoundary = std::numeric_limits<std::size_t>::max();

/// A port on a node, or on the diagram boundary when node == kBoundary.
/// As an edge source a boundary port indexes the diagram inputs; as an edge
/// target it indexes the diagram outputs.
struct PortRef {
  std::size_t node = kBoundary;
  std::size_t port = 0;

  bool is_boundary() const { return node == kBoundary; }
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct Node {
  std::string label;  // name in the expanded signature
  std::string symbol;
  SymbolKind kind = SymbolKind::generator;
  bool dualisable = false;
  int parity = 0;
  Word inputs;
  Word outputs;
};

/// Edges follow circuit time: from an output port (or boundary input) to an
/// input port (or boundary output).
struct Edge {
  PortRef source;
  PortRef target;
  SignedObject object;
  Variance source_variance = Variance::covariant;
  Variance target_variance = Variance::covariant;
};

/// Combinatorial form of a teleological diagram over the expanded signature,
/// with caps compiled into counit nodes.
struct CircuitGraph {
  std::vector<Node> nodes;
  Word inputs;
  Word outputs;
  std::vector<Edge> edges;
};

Edge make_edge(PortRef source, PortRef target, SignedObject object);

/// Edge incidence per port. Built by index_graph, which throws invalid_graph
/// when a port has zero or several edges or an endpoint is out of range.
struct GraphIndex {
  std::vector<std::vector<std::size_t>> node_in;   // [node][port] -> edge
  std::vector<std::vector<std::size_t>> node_out;  // [node][port] -> edge
  std::vector<std::size_t> boundary_in;            // [input]      -> edge
  std::vector<std::size_t> boundary_out;           // [output]     -> edge
};

GraphIndex index_graph(const CircuitGraph& g);

CircuitGraph elaborate(const TypedTerm& t, const MonoidalSignature& m);

/// Checks boundary degree, port arities and letters, forbidden variance,
/// variance marks against letters, and acyclicity. Stops at the first issue.
ValidationReport validate_graph(const CircuitGraph& g);

/// As above, and additionally checks each node's ports against its label's
/// type in the expanded signature.
ValidationReport validate_graph(const CircuitGraph& g, const MonoidalSignature& m);

/// Node with label f <-> f*, parity flipped, ports exchanged and starred.
Node reflect_node(const Node& n);

/// Horizontal reflection of a cap-free graph whose nodes are all dualisable.
CircuitGraph dual_graph(const CircuitGraph& g);

enum class TieBreak { smallest_first, largest_first };

/// Topological order of the precedence digraph (arcs follow circuit edges).
/// Throws invalid_graph on a cycle.
std::vector<std::size_t> topological_order(const CircuitGraph& g,
                                           TieBreak tie = TieBreak::smallest_first);

bool is_topological_order(const CircuitGraph& g, const std::vector<std::size_t>& order);

std::string render_dot(const CircuitGraph& g);

}  // namespace teleo

#pragma once

#include <set>
#include <string>

#include "teleo/circuit_graph.hpp"

namespace teleo {

/// Serialization of a graph under a canonical relabelling of its nodes.
/// Boundary order, labels, parities, port letters and variance marks are
/// part of the form.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const CircuitGraph& g);

/// Circuit isomorphism: a label-preserving node bijection that fixes the
/// boundary and carries edges to edges.
bool circuit_iso(const CircuitGraph& a, const CircuitGraph& b);

using ReflectionSubset = std::set<std::size_t>;

/// Reflects every node of r. Edges crossing into r gain a counit node;
/// caps leaving r through a counit node lose it. Throws infeasible_subset
/// when an edge falls outside the case table or the result has a cycle.
CircuitGraph reflect_subset(const CircuitGraph& g, const ReflectionSubset& r);

bool is_feasible(const CircuitGraph& g, const ReflectionSubset& r);

/// Teleological equivalence: some feasible reflection of a is circuit
/// isomorphic to b.
bool teleo_eq(const CircuitGraph& a, const CircuitGraph& b);

/// As teleo_eq, returning the witnessing subset of a's nodes.
std::optional<ReflectionSubset> teleo_witness(const CircuitGraph& a, const CircuitGraph& b);

}  // namespace teleo

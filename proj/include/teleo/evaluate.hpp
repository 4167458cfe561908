#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "teleo/category.hpp"
#include "teleo/circuit_graph.hpp"
#include "teleo/signature.hpp"

namespace teleo {

template <TeleologicalCategory C>
struct Valuation {
  std::map<std::string, typename C::Object> objects;
  std::map<std::string, typename C::Morphism> morphisms;
};

template <TeleologicalCategory C>
typename C::Object eval_letter(const SignedObject& letter, const Valuation<C>& val) {
  auto it = val.objects.find(letter.symbol);
  if (it == val.objects.end()) {
    throw Error(ErrorCode::unmapped_symbol, "object '" + letter.symbol + "' has no value");
  }
  return letter.starred ? C::object_dual(it->second) : it->second;
}

/// Left-nested tensor of the letters; the empty word is the unit.
template <TeleologicalCategory C>
typename C::Object eval_word(const Word& w, const Valuation<C>& val) {
  auto out = C::unit();
  for (const auto& letter : w) out = C::object_tensor(out, eval_letter<C>(letter, val));
  return out;
}

template <TeleologicalCategory C>
typename C::Object tensor_all(const std::vector<typename C::Object>& wires) {
  auto out = C::unit();
  for (const auto& w : wires) out = C::object_tensor(out, w);
  return out;
}

/// Permutation built from adjacent symmetries: output position j carries
/// input wire perm[j].
template <TeleologicalCategory C>
typename C::Morphism permute_by_symmetries(const std::vector<typename C::Object>& wires,
                                           const std::vector<std::size_t>& perm) {
  auto acc = C::identity(tensor_all<C>(wires));
  std::vector<std::size_t> current(wires.size());
  std::iota(current.begin(), current.end(), 0);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    auto i = static_cast<std::size_t>(std::find(current.begin(), current.end(), perm[j]) -
                                      current.begin());
    for (; i > j; --i) {
      std::vector<typename C::Object> before, after;
      for (std::size_t k = 0; k + 1 < i; ++k) before.push_back(wires[current[k]]);
      for (std::size_t k = i + 1; k < current.size(); ++k) after.push_back(wires[current[k]]);
      auto swap = C::tensor(
          C::tensor(C::identity(tensor_all<C>(before)),
                    C::symmetry(wires[current[i - 1]], wires[current[i]])),
          C::identity(tensor_all<C>(after)));
      acc = C::compose(acc, swap);
      std::swap(current[i - 1], current[i]);
    }
  }
  return acc;
}

template <TeleologicalCategory C>
typename C::Morphism permute(const std::vector<typename C::Object>& wires,
                             const std::vector<std::size_t>& perm) {
  if constexpr (HasPermute<C>) {
    return C::permute(wires, perm);
  } else {
    return permute_by_symmetries<C>(wires, perm);
  }
}

/// Value of a single node: val(f), the instance dual of val(f), or a counit.
template <TeleologicalCategory C>
typename C::Morphism node_value(const Node& node, const Valuation<C>& val) {
  if (node.kind == SymbolKind::counit) {
    return C::counit(eval_letter<C>(SignedObject{node.symbol, false}, val));
  }
  auto it = val.morphisms.find(node.symbol);
  if (it == val.morphisms.end()) {
    throw Error(ErrorCode::unmapped_symbol, "morphism '" + node.symbol + "' has no value");
  }
  if (node.kind == SymbolKind::generator) return it->second;
  auto d = C::dual(it->second);
  if (!d) {
    throw Error(ErrorCode::dual_undefined,
                "value of '" + node.symbol + "' has no dual in " + C::name());
  }
  return *d;
}

/// Folds the nodes in the given topological order (default: Kahn, smallest
/// node first). Each step brings the node's inputs to the end of the live
/// wires, applies id ⊗ node, and the last step sorts wires into output order.
template <TeleologicalCategory C>
typename C::Morphism evaluate(const CircuitGraph& g, const Valuation<C>& val,
                              std::optional<std::vector<std::size_t>> order = std::nullopt) {
  auto idx = index_graph(g);
  if (order) {
    if (!is_topological_order(g, *order)) {
      throw Error(ErrorCode::invalid_graph, "node order is not topological");
    }
  } else {
    order = topological_order(g);
  }

  std::vector<std::size_t> live = idx.boundary_in;  // edge ids, left to right
  auto wire_objects = [&](const std::vector<std::size_t>& edges) {
    std::vector<typename C::Object> out;
    for (auto e : edges) out.push_back(eval_letter<C>(g.edges[e].object, val));
    return out;
  };
  auto acc = C::identity(eval_word<C>(g.inputs, val));

  for (auto n : *order) {
    const auto& node = g.nodes[n];
    auto value = node_value<C>(node, val);
    if (!C::object_equal(C::dom(value), eval_word<C>(node.inputs, val)) ||
        !C::object_equal(C::cod(value), eval_word<C>(node.outputs, val))) {
      throw Error(ErrorCode::boundary_mismatch, "value of '" + node.label +
                                                    "' does not have type " +
                                                    to_string(node.inputs) + " → " +
                                                    to_string(node.outputs));
    }
    const auto& inputs = idx.node_in[n];
    std::vector<std::size_t> perm, others;
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (std::find(inputs.begin(), inputs.end(), live[i]) == inputs.end()) {
        perm.push_back(i);
        others.push_back(live[i]);
      }
    }
    for (auto e : inputs) {
      perm.push_back(static_cast<std::size_t>(std::find(live.begin(), live.end(), e) -
                                              live.begin()));
    }
    acc = C::compose(acc, permute<C>(wire_objects(live), perm));
    acc = C::compose(acc, C::tensor(C::identity(tensor_all<C>(wire_objects(others))), value));
    live = others;
    live.insert(live.end(), idx.node_out[n].begin(), idx.node_out[n].end());
  }

  std::vector<std::size_t> perm;
  for (auto e : idx.boundary_out) {
    perm.push_back(static_cast<std::size_t>(std::find(live.begin(), live.end(), e) -
                                            live.begin()));
  }
  return C::compose(acc, permute<C>(wire_objects(live), perm));
}

/// Checks that every declared morphism is mapped at its declared type and
/// that dualisable symbols have instance duals.
template <TeleologicalCategory C>
ValidationReport validate_valuation(const TeleologicalSignature& s, const Valuation<C>& val) {
  ValidationReport report;
  for (const auto& x : s.objects) {
    if (!val.objects.contains(x)) {
      report.add(ErrorCode::unmapped_symbol, x, "object '" + x + "' has no value");
    }
  }
  if (!report.ok()) return report;
  for (const auto& m : s.morphisms) {
    auto it = val.morphisms.find(m.name);
    if (it == val.morphisms.end()) {
      report.add(ErrorCode::unmapped_symbol, m.name, "morphism '" + m.name + "' has no value");
      continue;
    }
    auto dom = eval_word<C>(m.dom, val), cod = eval_word<C>(m.cod, val);
    if (!C::object_equal(C::dom(it->second), dom) || !C::object_equal(C::cod(it->second), cod)) {
      report.add(ErrorCode::type_mismatch, m.name,
                 "value of '" + m.name + "' is not typed " + C::describe(dom) + " → " +
                     C::describe(cod));
      continue;
    }
    if (m.dualisable && !C::dual(it->second)) {
      report.add(ErrorCode::dual_undefined, m.name,
                 "'" + m.name + "' is dualisable but its value has no dual in " + C::name());
    }
  }
  return report;
}

}  // namespace teleo

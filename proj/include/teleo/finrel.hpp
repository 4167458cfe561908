#pragma once

#include <vector>

#include "teleo/finset.hpp"

namespace teleo {

/// Relation dom -> cod as a boolean matrix, row-major by dom element.
struct FinRel {
  FinSet dom;
  FinSet cod;
  std::vector<char> matrix;

  bool holds(std::size_t a, std::size_t b) const { return matrix[a * cod.size() + b] != 0; }
};

/// Throws invalid_input when the matrix has the wrong size.
FinRel make_rel(FinSet dom, FinSet cod, std::vector<char> matrix);

FinRel rel_id(const FinSet& x);
FinRel rel_compose(const FinRel& r, const FinRel& s);
FinRel rel_tensor(const FinRel& r, const FinRel& s);
FinRel rel_sym(const FinSet& a, const FinSet& b);
FinRel rel_permute(const std::vector<FinSet>& wires, const std::vector<std::size_t>& perm);
/// Converse relation.
FinRel rel_dual(const FinRel& r);
/// X × X -> 1, holding exactly on the diagonal.
FinRel rel_counit(const FinSet& x);
/// Throws boundary_mismatch when the types differ.
bool rel_eq(const FinRel& a, const FinRel& b);

}  // namespace teleo

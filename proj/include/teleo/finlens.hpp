#pragma once

#include <string>
#include <vector>

#include "teleo/finset.hpp"

namespace teleo {

/// Total function between finite sets, as a dense table.
struct FunctionTable {
  FinSet dom;
  FinSet cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t i) const { return map[i]; }
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

FunctionTable function_id(const FinSet& s);
/// Throws invalid_input when a value is out of range or the table is partial.
FunctionTable make_function(FinSet dom, FinSet cod, std::vector<std::size_t> map);

/// (X, S): forward set X, backward set S.
struct LensObject {
  FinSet forward;
  FinSet backward;

  std::string to_string() const;
  friend bool operator==(const LensObject&, const LensObject&) = default;
};

LensObject lens_unit();
LensObject lens_object_tensor(const LensObject& a, const LensObject& b);
/// (X, S)* = (S, X)
LensObject lens_object_dual(const LensObject& o);

/// Lens (X, S) -> (Y, R). view: X -> Y, update: X × R -> S, the latter
/// indexed x * |R| + r.
struct FinLens {
  LensObject dom;
  LensObject cod;
  std::vector<std::size_t> view;
  std::vector<std::size_t> update;

  std::size_t get(std::size_t x) const { return view[x]; }
  std::size_t put(std::size_t x, std::size_t r) const {
    return update[x * cod.backward.size() + r];
  }
};

/// Checks table sizes and ranges; throws invalid_input.
FinLens make_lens(LensObject dom, LensObject cod, std::vector<std::size_t> view,
                  std::vector<std::size_t> update);

FinLens lens_id(const LensObject& o);
/// Diagrammatic order: first l, then m.
FinLens lens_compose(const FinLens& l, const FinLens& m);
FinLens lens_tensor(const FinLens& l, const FinLens& m);
FinLens lens_sym(const LensObject& a, const LensObject& b);
/// Lens reordering the factors of a ⊗-list: output position j carries input
/// wire perm[j].
FinLens lens_permute(const std::vector<LensObject>& wires, const std::vector<std::size_t>& perm);

/// The adaptor (f, g) : (X, S) -> (Y, R) for f : X -> Y and g : R -> S.
FinLens adaptor(const FunctionTable& f, const FunctionTable& g);
bool is_adaptor(const FinLens& l);
/// (f, g)* = (g, f). Throws not_an_adaptor.
FinLens lens_dual(const FinLens& l);
/// ε : (X × S, S × X) -> (1, 1), update((x, s), *) = (s, x).
FinLens lens_counit(const LensObject& o);
/// Table equality. Throws boundary_mismatch when the types differ.
bool lens_eq(const FinLens& a, const FinLens& b);

}  // namespace teleo

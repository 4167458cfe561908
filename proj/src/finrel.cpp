#include "teleo/finrel.hpp"

#include <numeric>

#include "teleo/error.hpp"

namespace teleo {

FinRel make_rel(FinSet dom, FinSet cod, std::vector<char> matrix) {
  if (matrix.size() != dom.size() * cod.size()) {
    throw Error(ErrorCode::invalid_input,
                "relation matrix for " + dom.name() + " -> " + cod.name() + " has wrong size");
  }
  for (auto& m : matrix) m = m ? 1 : 0;
  return {std::move(dom), std::move(cod), std::move(matrix)};
}

FinRel rel_id(const FinSet& x) {
  auto n = x.size();
  FinRel r{x, x, std::vector<char>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) r.matrix[i * n + i] = 1;
  return r;
}

FinRel rel_compose(const FinRel& r, const FinRel& s) {
  if (!(r.cod == s.dom)) {
    throw Error(ErrorCode::boundary_mismatch,
                "cannot compose " + r.cod.name() + " with " + s.dom.name());
  }
  auto na = r.dom.size(), nb = r.cod.size(), nc = s.cod.size();
  FinRel out{r.dom, s.cod, std::vector<char>(na * nc, 0)};
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (!r.holds(a, b)) continue;
      for (std::size_t c = 0; c < nc; ++c) {
        if (s.holds(b, c)) out.matrix[a * nc + c] = 1;
      }
    }
  }
  return out;
}

FinRel rel_tensor(const FinRel& r, const FinRel& s) {
  FinRel out{product(r.dom, s.dom), product(r.cod, s.cod), {}};
  auto na = r.dom.size(), nb = s.dom.size(), nc = r.cod.size(), nd = s.cod.size();
  out.matrix.assign(na * nb * nc * nd, 0);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t c = 0; c < nc; ++c) {
        if (!r.holds(a, c)) continue;
        for (std::size_t d = 0; d < nd; ++d) {
          if (s.holds(b, d)) out.matrix[(a * nb + b) * (nc * nd) + c * nd + d] = 1;
        }
      }
    }
  }
  return out;
}

FinRel rel_permute(const std::vector<FinSet>& wires, const std::vector<std::size_t>& perm) {
  FinSet dom = unit_set(), cod = unit_set();
  for (const auto& w : wires) dom = product(dom, w);
  for (auto p : perm) cod = product(cod, wires[p]);
  auto n = dom.size();
  FinRel out{dom, cod, std::vector<char>(n * n, 0)};
  std::vector<std::size_t> digit(wires.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto rest = i;
    for (std::size_t k = wires.size(); k-- > 0;) {
      digit[k] = rest % wires[k].size();
      rest /= wires[k].size();
    }
    std::size_t j = 0;
    for (auto p : perm) j = j * wires[p].size() + digit[p];
    out.matrix[i * n + j] = 1;
  }
  return out;
}

FinRel rel_sym(const FinSet& a, const FinSet& b) { return rel_permute({a, b}, {1, 0}); }

FinRel rel_dual(const FinRel& r) {
  auto na = r.dom.size(), nb = r.cod.size();
  FinRel out{r.cod, r.dom, std::vector<char>(na * nb, 0)};
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) out.matrix[b * na + a] = r.matrix[a * nb + b];
  }
  return out;
}

FinRel rel_counit(const FinSet& x) {
  auto n = x.size();
  FinRel out{product(x, x), unit_set(), std::vector<char>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) out.matrix[i * n + i] = 1;
  return out;
}

bool rel_eq(const FinRel& a, const FinRel& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) {
    throw Error(ErrorCode::boundary_mismatch, "relations " + a.dom.name() + " -> " +
                                                  a.cod.name() + " and " + b.dom.name() +
                                                  " -> " + b.cod.name() + " have different types");
  }
  return a.matrix == b.matrix;
}

}  // namespace teleo

#include "teleo/finlens.hpp"

#include <numeric>

#include "teleo/error.hpp"

namespace teleo {

FunctionTable function_id(const FinSet& s) {
  std::vector<std::size_t> map(s.size());
  std::iota(map.begin(), map.end(), 0);
  return {s, s, std::move(map)};
}

FunctionTable make_function(FinSet dom, FinSet cod, std::vector<std::size_t> map) {
  if (map.size() != dom.size()) {
    throw Error(ErrorCode::invalid_input, "function table on " + dom.name() + " has " +
                                              std::to_string(map.size()) + " entries");
  }
  for (auto v : map) {
    if (v >= cod.size()) {
      throw Error(ErrorCode::invalid_input, "function value outside " + cod.name());
    }
  }
  return {std::move(dom), std::move(cod), std::move(map)};
}

std::string LensObject::to_string() const {
  return "(" + forward.name() + ", " + backward.name() + ")";
}

LensObject lens_unit() { return {unit_set(), unit_set()}; }

LensObject lens_object_tensor(const LensObject& a, const LensObject& b) {
  return {product(a.forward, b.forward), product(a.backward, b.backward)};
}

LensObject lens_object_dual(const LensObject& o) { return {o.backward, o.forward}; }

FinLens make_lens(LensObject dom, LensObject cod, std::vector<std::size_t> view,
                  std::vector<std::size_t> update) {
  auto nx = dom.forward.size(), ny = cod.forward.size();
  auto nr = cod.backward.size(), ns = dom.backward.size();
  if (view.size() != nx || update.size() != nx * nr) {
    throw Error(ErrorCode::invalid_input, "lens tables do not cover " + dom.to_string() + " -> " +
                                              cod.to_string());
  }
  for (auto v : view) {
    if (v >= ny) throw Error(ErrorCode::invalid_input, "view value outside " + cod.forward.name());
  }
  for (auto u : update) {
    if (u >= ns) {
      throw Error(ErrorCode::invalid_input, "update value outside " + dom.backward.name());
    }
  }
  return {std::move(dom), std::move(cod), std::move(view), std::move(update)};
}

FinLens lens_id(const LensObject& o) {
  auto nx = o.forward.size(), ns = o.backward.size();
  FinLens l{o, o, std::vector<std::size_t>(nx), std::vector<std::size_t>(nx * ns)};
  for (std::size_t x = 0; x < nx; ++x) {
    l.view[x] = x;
    for (std::size_t s = 0; s < ns; ++s) l.update[x * ns + s] = s;
  }
  return l;
}

FinLens lens_compose(const FinLens& l, const FinLens& m) {
  if (!(l.cod == m.dom)) {
    throw Error(ErrorCode::boundary_mismatch,
                "cannot compose " + l.cod.to_string() + " with " + m.dom.to_string());
  }
  auto nx = l.dom.forward.size(), nq = m.cod.backward.size();
  FinLens out{l.dom, m.cod, std::vector<std::size_t>(nx), std::vector<std::size_t>(nx * nq)};
  for (std::size_t x = 0; x < nx; ++x) {
    auto y = l.get(x);
    out.view[x] = m.get(y);
    for (std::size_t q = 0; q < nq; ++q) out.update[x * nq + q] = l.put(x, m.put(y, q));
  }
  return out;
}

FinLens lens_tensor(const FinLens& l, const FinLens& m) {
  auto dom = lens_object_tensor(l.dom, m.dom);
  auto cod = lens_object_tensor(l.cod, m.cod);
  auto nx1 = l.dom.forward.size(), nx2 = m.dom.forward.size();
  auto ny2 = m.cod.forward.size();
  auto nr1 = l.cod.backward.size(), nr2 = m.cod.backward.size();
  auto ns2 = m.dom.backward.size();
  FinLens out{dom, cod, std::vector<std::size_t>(nx1 * nx2),
              std::vector<std::size_t>(nx1 * nx2 * nr1 * nr2)};
  for (std::size_t x1 = 0; x1 < nx1; ++x1) {
    for (std::size_t x2 = 0; x2 < nx2; ++x2) {
      auto x = x1 * nx2 + x2;
      out.view[x] = l.get(x1) * ny2 + m.get(x2);
      for (std::size_t r1 = 0; r1 < nr1; ++r1) {
        for (std::size_t r2 = 0; r2 < nr2; ++r2) {
          out.update[x * nr1 * nr2 + r1 * nr2 + r2] = l.put(x1, r1) * ns2 + m.put(x2, r2);
        }
      }
    }
  }
  return out;
}

FinLens lens_permute(const std::vector<LensObject>& wires, const std::vector<std::size_t>& perm) {
  LensObject dom = lens_unit(), cod = lens_unit();
  for (const auto& w : wires) dom = lens_object_tensor(dom, w);
  for (auto p : perm) cod = lens_object_tensor(cod, wires[p]);
  auto n = wires.size();
  auto nx = dom.forward.size(), nr = cod.backward.size();
  FinLens out{dom, cod, std::vector<std::size_t>(nx), std::vector<std::size_t>(nx * nr)};
  // digit-wise: each wire is a block of factors
  auto split = [&](std::size_t i, auto size_of, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> d(n);
    for (std::size_t k = order.size(); k-- > 0;) {
      auto radix = size_of(wires[order[k]]);
      d[order[k]] = i % radix;
      i /= radix;
    }
    return d;
  };
  auto join = [&](const std::vector<std::size_t>& d, auto size_of,
                  const std::vector<std::size_t>& order) {
    std::size_t i = 0;
    for (auto k : order) i = i * size_of(wires[k]) + d[k];
    return i;
  };
  auto fwd = [](const LensObject& o) { return o.forward.size(); };
  auto bwd = [](const LensObject& o) { return o.backward.size(); };
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  for (std::size_t x = 0; x < nx; ++x) {
    auto dx = split(x, fwd, identity);
    out.view[x] = join(dx, fwd, perm);
    for (std::size_t r = 0; r < nr; ++r) {
      auto dr = split(r, bwd, perm);
      out.update[x * nr + r] = join(dr, bwd, identity);
    }
  }
  return out;
}

FinLens lens_sym(const LensObject& a, const LensObject& b) { return lens_permute({a, b}, {1, 0}); }

FinLens adaptor(const FunctionTable& f, const FunctionTable& g) {
  LensObject dom{f.dom, g.cod}, cod{f.cod, g.dom};
  auto nx = f.dom.size(), nr = g.dom.size();
  FinLens out{dom, cod, f.map, std::vector<std::size_t>(nx * nr)};
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t r = 0; r < nr; ++r) out.update[x * nr + r] = g(r);
  }
  return out;
}

bool is_adaptor(const FinLens& l) {
  auto nx = l.dom.forward.size(), nr = l.cod.backward.size();
  for (std::size_t x = 1; x < nx; ++x) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (l.put(x, r) != l.put(0, r)) return false;
    }
  }
  return true;
}

FinLens lens_dual(const FinLens& l) {
  if (!is_adaptor(l)) {
    throw Error(ErrorCode::not_an_adaptor,
                "lens " + l.dom.to_string() + " -> " + l.cod.to_string() + " has no dual");
  }
  auto nr = l.cod.backward.size();
  std::vector<std::size_t> g(nr);
  for (std::size_t r = 0; r < nr; ++r) g[r] = l.put(0, r);
  FunctionTable gt{l.cod.backward, l.dom.backward, std::move(g)};
  FunctionTable ft{l.dom.forward, l.cod.forward, l.view};
  return adaptor(gt, ft);
}

FinLens lens_counit(const LensObject& o) {
  auto dom = lens_object_tensor(o, lens_object_dual(o));
  auto nx = o.forward.size(), ns = o.backward.size();
  FinLens out{dom, lens_unit(), std::vector<std::size_t>(nx * ns, 0),
              std::vector<std::size_t>(nx * ns)};
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t s = 0; s < ns; ++s) out.update[x * ns + s] = s * nx + x;
  }
  return out;
}

bool lens_eq(const FinLens& a, const FinLens& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) {
    throw Error(ErrorCode::boundary_mismatch, "lenses " + a.dom.to_string() + " -> " +
                                                  a.cod.to_string() + " and " +
                                                  b.dom.to_string() + " -> " +
                                                  b.cod.to_string() + " have different types");
  }
  return a.view == b.view && a.update == b.update;
}

}  // namespace teleo

#include "teleo/fingame.hpp"

#include <algorithm>
#include <memory>

#include "teleo/error.hpp"

namespace teleo {

namespace {

Responses everything(std::size_t n) { return Responses(n, 1); }

}  // namespace

FinGame game_compose(const FinGame& g0, const FinGame& h0) {
  if (!(g0.cod == h0.dom)) {
    throw Error(ErrorCode::boundary_mismatch,
                "cannot compose games at " + g0.cod.to_string() + " and " + h0.dom.to_string());
  }
  auto g = std::make_shared<const FinGame>(g0);
  auto h = std::make_shared<const FinGame>(h0);
  auto ng = g->strategies.size(), nh = h->strategies.size();
  auto nx = g->dom.forward.size(), nq = h->cod.backward.size();

  FinGame out;
  out.dom = g->dom;
  out.cod = h->cod;
  out.strategies = product(g->strategies, h->strategies);
  out.strategically_trivial = g->strategically_trivial && h->strategically_trivial;
  out.play.resize(ng * nh * nx);
  out.coplay.resize(ng * nh * nx * nq);
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t t = 0; t < nh; ++t) {
      auto st = s * nh + t;
      for (std::size_t x = 0; x < nx; ++x) {
        auto y = g->P(s, x);
        out.play[st * nx + x] = h->P(t, y);
        for (std::size_t q = 0; q < nq; ++q) {
          out.coplay[(st * nx + x) * nq + q] = g->C(s, x, h->C(t, y, q));
        }
      }
    }
  }
  out.best_response = [g, h, ng, nh](std::size_t x, const Context& k, std::size_t st) {
    auto s = st / nh, t = st % nh;
    auto ny = g->cod.forward.size();
    // context for g: continue through h's current strategy
    Context kg(ny);
    for (std::size_t y = 0; y < ny; ++y) kg[y] = h->C(t, y, k[h->P(t, y)]);
    auto bg = g->best_response(x, kg, s);
    auto bh = h->best_response(g->P(s, x), k, t);
    Responses out(ng * nh, 0);
    for (std::size_t a = 0; a < ng; ++a) {
      if (!bg[a]) continue;
      for (std::size_t b = 0; b < nh; ++b) out[a * nh + b] = bh[b];
    }
    return out;
  };
  return out;
}

FinGame game_tensor(const FinGame& g0, const FinGame& h0) {
  auto g = std::make_shared<const FinGame>(g0);
  auto h = std::make_shared<const FinGame>(h0);
  auto ng = g->strategies.size(), nh = h->strategies.size();
  auto nx1 = g->dom.forward.size(), nx2 = h->dom.forward.size();
  auto ny2 = h->cod.forward.size();
  auto nr1 = g->cod.backward.size(), nr2 = h->cod.backward.size();
  auto ns2 = h->dom.backward.size();

  FinGame out;
  out.dom = lens_object_tensor(g->dom, h->dom);
  out.cod = lens_object_tensor(g->cod, h->cod);
  out.strategies = product(g->strategies, h->strategies);
  out.strategically_trivial = g->strategically_trivial && h->strategically_trivial;
  auto nx = nx1 * nx2, nr = nr1 * nr2;
  out.play.resize(ng * nh * nx);
  out.coplay.resize(ng * nh * nx * nr);
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t t = 0; t < nh; ++t) {
      auto st = s * nh + t;
      for (std::size_t x1 = 0; x1 < nx1; ++x1) {
        for (std::size_t x2 = 0; x2 < nx2; ++x2) {
          auto x = x1 * nx2 + x2;
          out.play[st * nx + x] = g->P(s, x1) * ny2 + h->P(t, x2);
          for (std::size_t r1 = 0; r1 < nr1; ++r1) {
            for (std::size_t r2 = 0; r2 < nr2; ++r2) {
              out.coplay[(st * nx + x) * nr + r1 * nr2 + r2] =
                  g->C(s, x1, r1) * ns2 + h->C(t, x2, r2);
            }
          }
        }
      }
    }
  }
  out.best_response = [g, h, ng, nh, nx2, nr2](std::size_t x, const Context& k, std::size_t st) {
    auto s = st / nh, t = st % nh;
    auto x1 = x / nx2, x2 = x % nx2;
    auto ny1 = g->cod.forward.size(), ny2 = h->cod.forward.size();
    auto y1 = g->P(s, x1), y2 = h->P(t, x2);
    // each side sees the other's current play
    Context kg(ny1), kh(ny2);
    for (std::size_t a = 0; a < ny1; ++a) kg[a] = k[a * ny2 + y2] / nr2;
    for (std::size_t b = 0; b < ny2; ++b) kh[b] = k[y1 * ny2 + b] % nr2;
    auto bg = g->best_response(x1, kg, s);
    auto bh = h->best_response(x2, kh, t);
    Responses out(ng * nh, 0);
    for (std::size_t a = 0; a < ng; ++a) {
      if (!bg[a]) continue;
      for (std::size_t b = 0; b < nh; ++b) out[a * nh + b] = bh[b];
    }
    return out;
  };
  return out;
}

FinGame lift_lens(const FinLens& l) {
  FinGame out;
  out.dom = l.dom;
  out.cod = l.cod;
  out.strategies = unit_set();
  out.play = l.view;
  out.coplay = l.update;
  out.best_response = [](std::size_t, const Context&, std::size_t) { return everything(1); };
  out.strategically_trivial = true;
  return out;
}

FinGame game_id(const LensObject& o) { return lift_lens(lens_id(o)); }
FinGame game_sym(const LensObject& a, const LensObject& b) { return lift_lens(lens_sym(a, b)); }
FinGame game_permute(const std::vector<LensObject>& wires, const std::vector<std::size_t>& perm) {
  return lift_lens(lens_permute(wires, perm));
}
FinGame game_counit(const LensObject& o) { return lift_lens(lens_counit(o)); }

FinLens game_lens(const FinGame& g) {
  if (g.strategies.size() != 1) {
    throw Error(ErrorCode::invalid_input, "game has more than one strategy");
  }
  return FinLens{g.dom, g.cod, g.play, g.coplay};
}

std::optional<FinGame> game_dual(const FinGame& g) {
  if (!g.strategically_trivial) return std::nullopt;
  auto l = game_lens(g);
  if (!is_adaptor(l)) return std::nullopt;
  return lift_lens(lens_dual(l));
}

FinGame decision(const FinSet& observation, const FinSet& moves, const FinSet& payoffs) {
  std::vector<Rational> value(payoffs.size());
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    value[i] = parse_rational(payoffs.element_name(i));
  }
  auto nx = observation.size(), ny = moves.size();
  FinGame out;
  out.dom = {observation, unit_set()};
  out.cod = {moves, payoffs};
  out.strategies = power(moves, nx);
  auto n = out.strategies.size();
  // σ(x) is the x-th block of digits, first block most significant
  auto move_at = [nx, ny](std::size_t sigma, std::size_t x) {
    for (std::size_t i = x + 1; i < nx; ++i) sigma /= ny;
    return sigma % ny;
  };
  out.play.resize(n * nx);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < nx; ++x) out.play[s * nx + x] = move_at(s, x);
  }
  out.coplay.assign(n * nx * payoffs.size(), 0);
  out.best_response = [value, move_at, n, ny](std::size_t x, const Context& k, std::size_t) {
    Rational best = value[k[0]];
    for (std::size_t y = 1; y < ny; ++y) best = std::max(best, value[k[y]]);
    Responses r(n, 0);
    for (std::size_t s = 0; s < n; ++s) r[s] = value[k[move_at(s, x)]] == best;
    return r;
  };
  return out;
}

FinGame computation_cov(const FunctionTable& f) {
  return lift_lens(adaptor(f, function_id(unit_set())));
}

FinGame computation_contra(const FunctionTable& f) {
  return lift_lens(adaptor(function_id(unit_set()), f));
}

namespace {

// Calls visit(k) for every table Y -> R.
template <class F>
void for_each_context(std::size_t ny, std::size_t nr, F&& visit) {
  Context k(ny, 0);
  while (true) {
    visit(k);
    std::size_t i = ny;
    while (i > 0) {
      --i;
      if (++k[i] < nr) break;
      k[i] = 0;
      if (i == 0) return;
    }
    if (ny == 0) return;
  }
}

bool same_rows(const FinGame& a, std::size_t s, const FinGame& b, std::size_t t) {
  auto nx = a.dom.forward.size(), nr = a.cod.backward.size();
  for (std::size_t x = 0; x < nx; ++x) {
    if (a.P(s, x) != b.P(t, x)) return false;
    for (std::size_t r = 0; r < nr; ++r) {
      if (a.C(s, x, r) != b.C(t, x, r)) return false;
    }
  }
  return true;
}

bool responses_commute(const FinGame& a, const FinGame& b, const std::vector<std::size_t>& phi) {
  auto nx = a.dom.forward.size(), ny = a.cod.forward.size(), nr = a.cod.backward.size();
  auto n = phi.size();
  bool ok = true;
  for (std::size_t x = 0; x < nx && ok; ++x) {
    for_each_context(ny, nr, [&](const Context& k) {
      if (!ok) return;
      for (std::size_t s = 0; s < n && ok; ++s) {
        auto ra = a.best_response(x, k, s);
        auto rb = b.best_response(x, k, phi[s]);
        for (std::size_t s2 = 0; s2 < n; ++s2) {
          if (ra[s2] != rb[phi[s2]]) {
            ok = false;
            break;
          }
        }
      }
    });
  }
  return ok;
}

bool extend(const FinGame& a, const FinGame& b, std::vector<std::size_t>& phi,
            std::vector<bool>& used, std::size_t s, bool check_responses) {
  auto n = phi.size();
  if (s == n) return !check_responses || responses_commute(a, b, phi);
  for (std::size_t t = 0; t < n; ++t) {
    if (used[t] || !same_rows(a, s, b, t)) continue;
    used[t] = true;
    phi[s] = t;
    if (extend(a, b, phi, used, s + 1, check_responses)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

bool game_eq(const FinGame& a, const FinGame& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) {
    throw Error(ErrorCode::boundary_mismatch, "games " + a.dom.to_string() + " -> " +
                                                  a.cod.to_string() + " and " +
                                                  b.dom.to_string() + " -> " +
                                                  b.cod.to_string() + " have different types");
  }
  auto n = a.strategies.size();
  if (n != b.strategies.size()) return false;
  // both responses are constantly {*} for strategically trivial games
  bool check_responses = !(a.strategically_trivial && b.strategically_trivial);
  std::vector<std::size_t> phi(n);
  std::vector<bool> used(n, false);
  return extend(a, b, phi, used, 0, check_responses);
}

ScalarGame scalar_of(const FinGame& g) {
  if (!(g.dom == lens_unit()) || !(g.cod == lens_unit())) {
    throw Error(ErrorCode::not_a_scalar, "game " + g.dom.to_string() + " -> " +
                                             g.cod.to_string() + " is not an endomorphism of (1, 1)");
  }
  ScalarGame s{g.strategies, {}};
  Context k{0};
  for (std::size_t sigma = 0; sigma < g.strategies.size(); ++sigma) {
    s.best_response.push_back(g.best_response(0, k, sigma));
  }
  return s;
}

std::vector<std::size_t> equilibria(const ScalarGame& s) {
  std::vector<std::size_t> out;
  for (std::size_t sigma = 0; sigma < s.best_response.size(); ++sigma) {
    if (s.best_response[sigma][sigma]) out.push_back(sigma);
  }
  return out;
}

}  // namespace teleo

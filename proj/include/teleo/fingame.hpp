#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "teleo/finlens.hpp"

namespace teleo {

/// A context k : Y -> R as a table over Y.
using Context = std::vector<std::size_t>;
/// Membership mask over a strategy set.
using Responses = std::vector<char>;
/// B(x, k)(σ) as a mask over Σ.
using BestResponse = std::function<Responses(std::size_t x, const Context& k, std::size_t sigma)>;

/// Open game (X, S) -> (Y, R) over finite carriers.
struct FinGame {
  LensObject dom;
  LensObject cod;
  FinSet strategies;
  std::vector<std::size_t> play;    // [σ, x] -> y
  std::vector<std::size_t> coplay;  // [σ, x, r] -> s
  BestResponse best_response;
  // Singleton strategies and a best response that always holds; set by the
  // lens embedding and kept by composition and tensor.
  bool strategically_trivial = false;

  std::size_t P(std::size_t sigma, std::size_t x) const {
    return play[sigma * dom.forward.size() + x];
  }
  std::size_t C(std::size_t sigma, std::size_t x, std::size_t r) const {
    return coplay[(sigma * dom.forward.size() + x) * cod.backward.size() + r];
  }
};

FinGame game_compose(const FinGame& g, const FinGame& h);
FinGame game_tensor(const FinGame& g, const FinGame& h);

FinGame lift_lens(const FinLens& l);
FinGame game_id(const LensObject& o);
FinGame game_sym(const LensObject& a, const LensObject& b);
FinGame game_permute(const std::vector<LensObject>& wires, const std::vector<std::size_t>& perm);
FinGame game_counit(const LensObject& o);

/// The underlying lens of a game with one strategy.
FinLens game_lens(const FinGame& g);

/// Defined on strategically trivial games whose lens is an adaptor.
std::optional<FinGame> game_dual(const FinGame& g);

/// Single player observing X and choosing from Y, typed (X, 1) -> (Y, P).
/// Elements of P are read as rational payoffs. Σ = Y^X; a deviation is a
/// best response when it is optimal at the observed x.
FinGame decision(const FinSet& observation, const FinSet& moves, const FinSet& payoffs);

/// (X, 1) -> (Y, 1) lifting f : X -> Y.
FinGame computation_cov(const FunctionTable& f);
/// (1, Y) -> (1, X) with coplay f : X -> Y.
FinGame computation_contra(const FunctionTable& f);

/// Same type, and a strategy bijection commuting with play, coplay and best
/// response. Throws boundary_mismatch when the types differ.
bool game_eq(const FinGame& a, const FinGame& b);

struct ScalarGame {
  FinSet strategies;
  std::vector<Responses> best_response;  // [σ] -> mask over Σ
};

/// Throws not_a_scalar unless dom = cod = (1, 1).
ScalarGame scalar_of(const FinGame& g);
/// Profiles σ with σ ∈ B(σ), ascending.
std::vector<std::size_t> equilibria(const ScalarGame& s);

}  // namespace teleo

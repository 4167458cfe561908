#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "teleo/evaluate.hpp"
#include "teleo/fingame.hpp"
#include "teleo/term.hpp"

namespace teleo {

/// Normal-form game: one strategy set per player and a payoff vector per
/// profile. Profiles are indexed in mixed radix, player 0 most significant.
struct ClassicalGame {
  std::vector<std::string> players;
  std::vector<FinSet> strategies;
  std::vector<std::vector<Rational>> payoff;  // [profile][player]

  FinSet profiles() const;
};

struct OracleResult {
  FinSet profiles;
  std::vector<Responses> correspondence;  // [σ] -> profiles of best replies to σ
  std::vector<std::size_t> equilibria;    // fixpoints of the correspondence
  std::vector<std::size_t> deviation_equilibria;  // no profitable unilateral deviation
};

OracleResult oracle_nash(const ClassicalGame& c);

enum class Fig1Variant { simultaneous, sequential, imperfect };

std::string to_string(Fig1Variant v);
/// "a", "b" or "c". Throws invalid_input.
Fig1Variant parse_variant(const std::string& text);

/// Two-player game: player 1 picks from X, player 2 from Y; payoffs[x][y]
/// holds (u1, u2). For the imperfect-information variant player 2 observes
/// the class of x under `partition`.
struct Fig1Spec {
  FinSet x;
  FinSet y;
  std::vector<std::vector<std::pair<Rational, Rational>>> payoffs;
  std::optional<std::vector<std::vector<std::string>>> partition;
};

struct Fig1Build {
  TeleologicalSignature signature;
  TermPtr term;
  Valuation<GameCategory> valuation;
  ClassicalGame strategic_form;
};

/// Term, signature and game valuation for the chosen variant, plus the
/// matching strategic form. Throws invalid_partition.
Fig1Build build_fig1(Fig1Variant variant, const Fig1Spec& spec);

struct Fig1Outcome {
  ScalarGame scalar;
  OracleResult oracle;
  std::vector<std::size_t> equilibria;
  bool tables_agree = false;
  bool equilibria_agree = false;
};

Fig1Outcome solve_fig1(const Fig1Build& build);

}  // namespace teleo

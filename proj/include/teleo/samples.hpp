#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "teleo/fingame.hpp"
#include "teleo/finlens.hpp"
#include "teleo/finrel.hpp"
#include "teleo/laws.hpp"

namespace teleo {

/// "S<n>" = {0, ..., n-1}
FinSet numbered_set(std::size_t n);
/// numbered sets of sizes 1..bound
std::vector<FinSet> numbered_sets(std::size_t bound);
/// every (X, S) with |X|, |S| in 1..bound
std::vector<LensObject> lens_objects(std::size_t bound);

std::vector<FunctionTable> all_functions(const FinSet& dom, const FinSet& cod);
std::vector<FinRel> all_relations(const FinSet& dom, const FinSet& cod);
std::vector<FinLens> all_adaptors(const LensObject& dom, const LensObject& cod);
std::vector<FinLens> all_lenses(const LensObject& dom, const LensObject& cod);

FunctionTable random_function(const FinSet& dom, const FinSet& cod, std::mt19937_64& rng);
FinRel random_relation(const FinSet& dom, const FinSet& cod, std::mt19937_64& rng);
FinLens random_lens(const LensObject& dom, const LensObject& cod, std::mt19937_64& rng);
FinLens random_adaptor(const LensObject& dom, const LensObject& cod, std::mt19937_64& rng);

/// Axioms on every relation between sets of size <= bound, then on
/// `random_samples` relations with at least one side of size bound + 1.
LawReport rel_law_suite(std::size_t bound, std::size_t random_samples, std::uint64_t seed);
/// Axioms on every adaptor between lens objects with carriers of size <= bound.
LawReport lens_law_suite(std::size_t bound);
/// Axioms on lifted adaptors with carriers of size <= bound.
LawReport game_law_suite(std::size_t bound);
/// Lens -> Game embedding is a teleological functor on carriers <= bound.
LawReport lift_functor_suite(std::size_t bound);

}  // namespace teleo

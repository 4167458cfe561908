#include "teleo/samples.hpp"

namespace teleo {

FinSet numbered_set(std::size_t n) {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back(std::to_string(i));
  return make_set("S" + std::to_string(n), elements);
}

std::vector<FinSet> numbered_sets(std::size_t bound) {
  std::vector<FinSet> out;
  for (std::size_t n = 1; n <= bound; ++n) out.push_back(numbered_set(n));
  return out;
}

std::vector<LensObject> lens_objects(std::size_t bound) {
  std::vector<LensObject> out;
  for (const auto& x : numbered_sets(bound)) {
    for (const auto& s : numbered_sets(bound)) out.push_back({x, s});
  }
  return out;
}

std::vector<FunctionTable> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<FunctionTable> out;
  std::vector<std::size_t> map(dom.size(), 0);
  while (true) {
    out.push_back({dom, cod, map});
    std::size_t i = map.size();
    while (i > 0 && ++map[i - 1] == cod.size()) map[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<FinRel> all_relations(const FinSet& dom, const FinSet& cod) {
  auto cells = dom.size() * cod.size();
  std::vector<FinRel> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << cells); ++bits) {
    std::vector<char> m(cells);
    for (std::size_t c = 0; c < cells; ++c) m[c] = (bits >> c) & 1;
    out.push_back({dom, cod, std::move(m)});
  }
  return out;
}

std::vector<FinLens> all_adaptors(const LensObject& dom, const LensObject& cod) {
  std::vector<FinLens> out;
  for (const auto& f : all_functions(dom.forward, cod.forward)) {
    for (const auto& g : all_functions(cod.backward, dom.backward)) out.push_back(adaptor(f, g));
  }
  return out;
}

std::vector<FinLens> all_lenses(const LensObject& dom, const LensObject& cod) {
  std::vector<FinLens> out;
  auto updates = all_functions(product(dom.forward, cod.backward), dom.backward);
  for (const auto& v : all_functions(dom.forward, cod.forward)) {
    for (const auto& u : updates) out.push_back({dom, cod, v.map, u.map});
  }
  return out;
}

FunctionTable random_function(const FinSet& dom, const FinSet& cod, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, cod.size() - 1);
  std::vector<std::size_t> map(dom.size());
  for (auto& v : map) v = pick(rng);
  return {dom, cod, std::move(map)};
}

FinRel random_relation(const FinSet& dom, const FinSet& cod, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<char> m(dom.size() * cod.size());
  for (auto& c : m) c = coin(rng) ? 1 : 0;
  return {dom, cod, std::move(m)};
}

FinLens random_lens(const LensObject& dom, const LensObject& cod, std::mt19937_64& rng) {
  auto v = random_function(dom.forward, cod.forward, rng);
  auto u = random_function(product(dom.forward, cod.backward), dom.backward, rng);
  return {dom, cod, v.map, u.map};
}

FinLens random_adaptor(const LensObject& dom, const LensObject& cod, std::mt19937_64& rng) {
  return adaptor(random_function(dom.forward, cod.forward, rng),
                 random_function(cod.backward, dom.backward, rng));
}

LawReport rel_law_suite(std::size_t bound, std::size_t random_samples, std::uint64_t seed) {
  auto sets = numbered_sets(bound);
  std::vector<FinRel> rels;
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      auto all = all_relations(a, b);
      rels.insert(rels.end(), all.begin(), all.end());
    }
  }
  auto report = check_axioms<RelCategory>(sets, rels);
  if (random_samples == 0) return report;

  auto wide = numbered_sets(bound + 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, wide.size() - 1);
  std::vector<FinRel> sample;
  while (sample.size() < random_samples) {
    const auto& a = wide[pick(rng)];
    const auto& b = wide[pick(rng)];
    if (a.size() <= bound && b.size() <= bound) continue;
    sample.push_back(random_relation(a, b, rng));
  }
  report.merge(check_axioms<RelCategory>(wide, sample));
  return report;
}

LawReport lens_law_suite(std::size_t bound) {
  auto objects = lens_objects(bound);
  std::vector<FinLens> adaptors;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      auto all = all_adaptors(a, b);
      adaptors.insert(adaptors.end(), all.begin(), all.end());
    }
  }
  return check_axioms<LensCategory>(objects, adaptors);
}

LawReport game_law_suite(std::size_t bound) {
  auto objects = lens_objects(bound);
  std::vector<FinGame> games;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      for (const auto& l : all_adaptors(a, b)) games.push_back(lift_lens(l));
    }
  }
  return check_axioms<GameCategory>(objects, games);
}

LawReport lift_functor_suite(std::size_t bound) {
  auto objects = lens_objects(bound);
  std::vector<FinLens> adaptors;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      auto all = all_adaptors(a, b);
      adaptors.insert(adaptors.end(), all.begin(), all.end());
    }
  }
  // all adaptors plus two arbitrary lenses per pair of objects
  std::mt19937_64 rng(17);
  auto lenses = adaptors;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      for (int i = 0; i < 2; ++i) lenses.push_back(random_lens(a, b, rng));
    }
  }
  return check_functor<LensCategory, GameCategory>(
      [](const LensObject& o) { return o; }, [](const FinLens& l) { return lift_lens(l); },
      objects, lenses, adaptors);
}

}  // namespace teleo

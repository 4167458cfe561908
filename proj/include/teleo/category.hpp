#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "teleo/fingame.hpp"
#include "teleo/finlens.hpp"
#include "teleo/finrel.hpp"

namespace teleo {

/// Operations a concrete teleological category provides. Composition is in
/// diagrammatic order; dual on morphisms is partial.
template <class C>
concept TeleologicalCategory = requires(const typename C::Object& a,
                                        const typename C::Object& b,
                                        const typename C::Morphism& f,
                                        const typename C::Morphism& g) {
  { C::name() } -> std::convertible_to<std::string>;
  { C::unit() } -> std::same_as<typename C::Object>;
  { C::object_tensor(a, b) } -> std::same_as<typename C::Object>;
  { C::object_dual(a) } -> std::same_as<typename C::Object>;
  { C::object_equal(a, b) } -> std::same_as<bool>;
  { C::describe(a) } -> std::convertible_to<std::string>;
  { C::identity(a) } -> std::same_as<typename C::Morphism>;
  { C::compose(f, g) } -> std::same_as<typename C::Morphism>;
  { C::tensor(f, g) } -> std::same_as<typename C::Morphism>;
  { C::symmetry(a, b) } -> std::same_as<typename C::Morphism>;
  { C::counit(a) } -> std::same_as<typename C::Morphism>;
  { C::dual(f) } -> std::same_as<std::optional<typename C::Morphism>>;
  { C::equal(f, g) } -> std::same_as<bool>;
  { C::dom(f) } -> std::convertible_to<typename C::Object>;
  { C::cod(f) } -> std::convertible_to<typename C::Object>;
};

/// Instances may supply a direct permutation of a ⊗-list of wires.
template <class C>
concept HasPermute = requires(const std::vector<typename C::Object>& wires,
                              const std::vector<std::size_t>& perm) {
  { C::permute(wires, perm) } -> std::same_as<typename C::Morphism>;
};

struct LensCategory {
  using Object = LensObject;
  using Morphism = FinLens;

  static std::string name() { return "lens"; }
  static Object unit() { return lens_unit(); }
  static Object object_tensor(const Object& a, const Object& b) { return lens_object_tensor(a, b); }
  static Object object_dual(const Object& a) { return lens_object_dual(a); }
  static bool object_equal(const Object& a, const Object& b) { return a == b; }
  static std::string describe(const Object& a) { return a.to_string(); }
  static Morphism identity(const Object& a) { return lens_id(a); }
  static Morphism compose(const Morphism& f, const Morphism& g) { return lens_compose(f, g); }
  static Morphism tensor(const Morphism& f, const Morphism& g) { return lens_tensor(f, g); }
  static Morphism symmetry(const Object& a, const Object& b) { return lens_sym(a, b); }
  static Morphism counit(const Object& a) { return lens_counit(a); }
  static std::optional<Morphism> dual(const Morphism& f) {
    if (!is_adaptor(f)) return std::nullopt;
    return lens_dual(f);
  }
  static bool equal(const Morphism& f, const Morphism& g) { return lens_eq(f, g); }
  static const Object& dom(const Morphism& f) { return f.dom; }
  static const Object& cod(const Morphism& f) { return f.cod; }
  static Morphism permute(const std::vector<Object>& w, const std::vector<std::size_t>& p) {
    return lens_permute(w, p);
  }
};

struct RelCategory {
  using Object = FinSet;
  using Morphism = FinRel;

  static std::string name() { return "rel"; }
  static Object unit() { return unit_set(); }
  static Object object_tensor(const Object& a, const Object& b) { return product(a, b); }
  static Object object_dual(const Object& a) { return a; }
  static bool object_equal(const Object& a, const Object& b) { return a == b; }
  static std::string describe(const Object& a) { return a.name(); }
  static Morphism identity(const Object& a) { return rel_id(a); }
  static Morphism compose(const Morphism& f, const Morphism& g) { return rel_compose(f, g); }
  static Morphism tensor(const Morphism& f, const Morphism& g) { return rel_tensor(f, g); }
  static Morphism symmetry(const Object& a, const Object& b) { return rel_sym(a, b); }
  static Morphism counit(const Object& a) { return rel_counit(a); }
  static std::optional<Morphism> dual(const Morphism& f) { return rel_dual(f); }
  static bool equal(const Morphism& f, const Morphism& g) { return rel_eq(f, g); }
  static const Object& dom(const Morphism& f) { return f.dom; }
  static const Object& cod(const Morphism& f) { return f.cod; }
  static Morphism permute(const std::vector<Object>& w, const std::vector<std::size_t>& p) {
    return rel_permute(w, p);
  }
};

struct GameCategory {
  using Object = LensObject;
  using Morphism = FinGame;

  static std::string name() { return "game"; }
  static Object unit() { return lens_unit(); }
  static Object object_tensor(const Object& a, const Object& b) { return lens_object_tensor(a, b); }
  static Object object_dual(const Object& a) { return lens_object_dual(a); }
  static bool object_equal(const Object& a, const Object& b) { return a == b; }
  static std::string describe(const Object& a) { return a.to_string(); }
  static Morphism identity(const Object& a) { return game_id(a); }
  static Morphism compose(const Morphism& f, const Morphism& g) { return game_compose(f, g); }
  static Morphism tensor(const Morphism& f, const Morphism& g) { return game_tensor(f, g); }
  static Morphism symmetry(const Object& a, const Object& b) { return game_sym(a, b); }
  static Morphism counit(const Object& a) { return game_counit(a); }
  static std::optional<Morphism> dual(const Morphism& f) { return game_dual(f); }
  static bool equal(const Morphism& f, const Morphism& g) { return game_eq(f, g); }
  static const Object& dom(const Morphism& f) { return f.dom; }
  static const Object& cod(const Morphism& f) { return f.cod; }
  static Morphism permute(const std::vector<Object>& w, const std::vector<std::size_t>& p) {
    return game_permute(w, p);
  }
};

static_assert(TeleologicalCategory<LensCategory> && HasPermute<LensCategory>);
static_assert(TeleologicalCategory<RelCategory> && HasPermute<RelCategory>);
static_assert(TeleologicalCategory<GameCategory> && HasPermute<GameCategory>);

}  // namespace teleo

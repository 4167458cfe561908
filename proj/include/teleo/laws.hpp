#pragma once

#include <functional>
#include <string>
#include <vector>

#include "teleo/category.hpp"

namespace teleo {

struct LawReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void merge(const LawReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

namespace detail {

template <TeleologicalCategory C>
bool same_morphism(const typename C::Morphism& f, const typename C::Morphism& g) {
  return C::object_equal(C::dom(f), C::dom(g)) && C::object_equal(C::cod(f), C::cod(g)) &&
         C::equal(f, g);
}

template <TeleologicalCategory C>
std::string type_of(const typename C::Morphism& f) {
  return C::describe(C::dom(f)) + " → " + C::describe(C::cod(f));
}

}  // namespace detail

/// Verifies on the sample, by morphism equality:
///   (1) ε_{X*} = σ_{X*,X} ; ε_X
///   (2) ε_{X⊗Y} = (X ⊗ σ_{Y,X*} ⊗ Y*) ; (ε_X ⊗ ε_Y)
///   (3) (f ⊗ Y*) ; ε_Y = (X ⊗ f*) ; ε_X
///   (4) dual is involutive, preserves identities, symmetries, composition
///       and tensor, and is monoidal on objects.
/// `dualisable` must contain morphisms on which the instance dual is defined.
template <TeleologicalCategory C>
LawReport check_axioms(const std::vector<typename C::Object>& objects,
                       const std::vector<typename C::Morphism>& dualisable) {
  using detail::same_morphism;
  LawReport report;
  auto check = [&](bool holds, const std::string& what) {
    ++report.checked;
    if (!holds) report.failures.push_back(what);
  };

  for (const auto& x : objects) {
    auto xs = C::object_dual(x);
    check(C::object_equal(C::object_dual(xs), x), "dual involutive on object " + C::describe(x));
    check(same_morphism<C>(C::counit(xs), C::compose(C::symmetry(xs, x), C::counit(x))),
          "axiom 1 (counit of dual) at " + C::describe(x));
    auto d = C::dual(C::identity(x));
    check(d && same_morphism<C>(*d, C::identity(xs)), "dual of identity at " + C::describe(x));
  }
  check(C::object_equal(C::object_dual(C::unit()), C::unit()), "dual of unit");

  for (const auto& x : objects) {
    for (const auto& y : objects) {
      auto xs = C::object_dual(x), ys = C::object_dual(y);
      check(C::object_equal(C::object_dual(C::object_tensor(x, y)), C::object_tensor(xs, ys)),
            "dual of tensor at " + C::describe(x) + ", " + C::describe(y));
      auto middle = C::tensor(C::tensor(C::identity(x), C::symmetry(y, xs)), C::identity(ys));
      check(same_morphism<C>(C::counit(C::object_tensor(x, y)),
                             C::compose(middle, C::tensor(C::counit(x), C::counit(y)))),
            "axiom 2 (counit of tensor) at " + C::describe(x) + ", " + C::describe(y));
      auto ds = C::dual(C::symmetry(x, y));
      check(ds && same_morphism<C>(*ds, C::symmetry(ys, xs)),
            "dual of symmetry at " + C::describe(x) + ", " + C::describe(y));
    }
  }

  std::vector<typename C::Morphism> duals;
  for (const auto& f : dualisable) {
    auto d = C::dual(f);
    if (!d) {
      check(false, "dual undefined on sampled morphism " + detail::type_of<C>(f));
      duals.push_back(f);
      continue;
    }
    duals.push_back(*d);
    auto dd = C::dual(*d);
    check(dd && same_morphism<C>(*dd, f), "dual involutive on " + detail::type_of<C>(f));
    const auto& x = C::dom(f);
    const auto& y = C::cod(f);
    auto lhs = C::compose(C::tensor(f, C::identity(C::object_dual(y))), C::counit(y));
    auto rhs = C::compose(C::tensor(C::identity(x), *d), C::counit(x));
    check(same_morphism<C>(lhs, rhs), "axiom 3 (extranaturality) at " + detail::type_of<C>(f));
  }

  for (std::size_t i = 0; i < dualisable.size(); ++i) {
    for (std::size_t j = 0; j < dualisable.size(); ++j) {
      const auto& f = dualisable[i];
      const auto& g = dualisable[j];
      auto t = C::dual(C::tensor(f, g));
      check(t && same_morphism<C>(*t, C::tensor(duals[i], duals[j])),
            "dual of tensor at " + detail::type_of<C>(f) + ", " + detail::type_of<C>(g));
      if (!C::object_equal(C::cod(f), C::dom(g))) continue;
      auto c = C::dual(C::compose(f, g));
      check(c && same_morphism<C>(*c, C::compose(duals[j], duals[i])),
            "dual of composite at " + detail::type_of<C>(f) + ", " + detail::type_of<C>(g));
    }
  }
  return report;
}

/// Checks that (object map, morphism map) is a teleological functor on the
/// sample: monoidal functoriality, symmetries, duals of objects and of the
/// sampled dualisable morphisms, and counits.
template <TeleologicalCategory C, TeleologicalCategory D>
LawReport check_functor(
    const std::function<typename D::Object(const typename C::Object&)>& on_objects,
    const std::function<typename D::Morphism(const typename C::Morphism&)>& on_morphisms,
    const std::vector<typename C::Object>& objects,
    const std::vector<typename C::Morphism>& morphisms,
    const std::vector<typename C::Morphism>& dualisable) {
  using detail::same_morphism;
  LawReport report;
  auto check = [&](bool holds, const std::string& what) {
    ++report.checked;
    if (!holds) report.failures.push_back(what);
  };

  check(D::object_equal(on_objects(C::unit()), D::unit()), "unit preserved");
  for (const auto& x : objects) {
    auto fx = on_objects(x);
    check(D::object_equal(on_objects(C::object_dual(x)), D::object_dual(fx)),
          "object dual preserved at " + C::describe(x));
    check(same_morphism<D>(on_morphisms(C::identity(x)), D::identity(fx)),
          "identity preserved at " + C::describe(x));
    check(same_morphism<D>(on_morphisms(C::counit(x)), D::counit(fx)),
          "counit preserved at " + C::describe(x));
    for (const auto& y : objects) {
      auto fy = on_objects(y);
      check(D::object_equal(on_objects(C::object_tensor(x, y)), D::object_tensor(fx, fy)),
            "object tensor preserved at " + C::describe(x) + ", " + C::describe(y));
      check(same_morphism<D>(on_morphisms(C::symmetry(x, y)), D::symmetry(fx, fy)),
            "symmetry preserved at " + C::describe(x) + ", " + C::describe(y));
    }
  }
  for (const auto& f : morphisms) {
    auto ff = on_morphisms(f);
    for (const auto& g : morphisms) {
      auto fg = on_morphisms(g);
      check(same_morphism<D>(on_morphisms(C::tensor(f, g)), D::tensor(ff, fg)),
            "tensor preserved at " + detail::type_of<C>(f) + ", " + detail::type_of<C>(g));
      if (!C::object_equal(C::cod(f), C::dom(g))) continue;
      check(same_morphism<D>(on_morphisms(C::compose(f, g)), D::compose(ff, fg)),
            "composite preserved at " + detail::type_of<C>(f) + ", " + detail::type_of<C>(g));
    }
  }
  for (const auto& f : dualisable) {
    auto d = C::dual(f);
    auto fd = D::dual(on_morphisms(f));
    check(d && fd && same_morphism<D>(on_morphisms(*d), *fd),
          "dual preserved at " + detail::type_of<C>(f));
  }
  return report;
}

}  // namespace teleo

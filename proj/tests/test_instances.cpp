#include <doctest.h>

#include "support.hpp"
#include "teleo/finlens.hpp"
#include "teleo/finrel.hpp"
#include "teleo/finset.hpp"

using namespace teleo;

namespace {

FinSet abc() { return make_set("ABC", {"a", "b", "c"}); }
FinSet pq() { return make_set("PQ", {"p", "q"}); }

}  // namespace

TEST_CASE("finite sets") {
  auto x = product(abc(), pq());
  CHECK(x.size() == 6);
  CHECK(x.element_name(pair_index(1, 0, 2)) == "(b,p)");
  CHECK(x.index_of("(c,q)") == 5);
  CHECK(x.digits(3) == std::vector<std::size_t>{1, 1});
  CHECK(x.from_digits({2, 1}) == 5);
  CHECK(unit_set().size() == 1);
  CHECK(product(unit_set(), abc()) == abc());
  CHECK(power(pq(), 3).size() == 8);
  CHECK(power(pq(), 0).size() == 1);
  CHECK_THROWS_AS(make_set("E", {}), Error);
  CHECK_THROWS_AS(make_set("D", {"a", "a"}), Error);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

// ---------------------------------------------------------------- lenses

TEST_CASE("lens composition and tensor follow the defining formulas") {
  std::mt19937_64 rng(12);
  auto objects = lens_objects(3);
  std::uniform_int_distribution<std::size_t> pick(0, objects.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = objects[pick(rng)], b = objects[pick(rng)], c = objects[pick(rng)];
    auto l = random_lens(a, b, rng), m = random_lens(b, c, rng);
    auto lm = lens_compose(l, m);
    auto nb = c.backward.size();
    for (std::size_t x = 0; x < a.forward.size(); ++x) {
      CHECK(lm.get(x) == m.get(l.get(x)));
      for (std::size_t r = 0; r < nb; ++r) {
        CHECK(lm.put(x, r) == l.put(x, m.put(l.get(x), r)));
      }
    }

    auto d = objects[pick(rng)];
    auto n = random_lens(c, d, rng);
    auto t = lens_tensor(l, n);
    CHECK(t.dom == lens_object_tensor(a, c));
    CHECK(t.cod == lens_object_tensor(b, d));
    for (std::size_t x1 = 0; x1 < a.forward.size(); ++x1) {
      for (std::size_t x2 = 0; x2 < c.forward.size(); ++x2) {
        auto x = pair_index(x1, x2, c.forward.size());
        CHECK(t.get(x) == pair_index(l.get(x1), n.get(x2), d.forward.size()));
        for (std::size_t r1 = 0; r1 < b.backward.size(); ++r1) {
          for (std::size_t r2 = 0; r2 < d.backward.size(); ++r2) {
            auto r = pair_index(r1, r2, d.backward.size());
            CHECK(t.put(x, r) ==
                  pair_index(l.put(x1, r1), n.put(x2, r2), c.backward.size()));
          }
        }
      }
    }
  }
}

TEST_CASE("lens object duals and adaptors") {
  LensObject o{abc(), pq()};
  CHECK(lens_object_dual(o) == LensObject{pq(), abc()});
  CHECK(lens_object_dual(lens_object_dual(o)) == o);
  CHECK(lens_object_tensor(o, lens_object_dual(o)).forward.size() == 6);

  auto f = make_function(abc(), pq(), {0, 1, 1});
  auto g = make_function(abc(), abc(), {2, 0, 1});
  auto l = adaptor(f, g);  // (ABC, ABC) -> (PQ, ABC)
  CHECK(is_adaptor(l));
  auto d = lens_dual(l);
  CHECK(lens_eq(d, adaptor(g, f)));
  CHECK(lens_eq(lens_dual(d), l));

  std::mt19937_64 rng(1);
  auto general = random_lens({abc(), pq()}, {pq(), abc()}, rng);
  while (is_adaptor(general)) general = random_lens({abc(), pq()}, {pq(), abc()}, rng);
  CHECK_THROWS_AS(lens_dual(general), Error);
}

TEST_CASE("lens counit swaps the pair") {
  LensObject o{abc(), pq()};
  auto e = lens_counit(o);
  CHECK(e.dom == lens_object_tensor(o, lens_object_dual(o)));
  CHECK(e.cod == lens_unit());
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t s = 0; s < 2; ++s) {
      CHECK(e.put(pair_index(x, s, 2), 0) == pair_index(s, x, 3));
    }
  }
}

TEST_CASE("lens symmetry and permutation") {
  LensObject a{abc(), pq()}, b{pq(), pq()};
  auto s = lens_sym(a, b);
  CHECK(lens_eq(lens_compose(s, lens_sym(b, a)), lens_id(lens_object_tensor(a, b))));
  CHECK(lens_eq(lens_permute({a, b}, {1, 0}), s));
  CHECK(lens_eq(lens_permute({a, b}, {0, 1}), lens_id(lens_object_tensor(a, b))));
  CHECK_THROWS_AS(lens_eq(lens_id(a), lens_id(b)), Error);
}

// ---------------------------------------------------------------- relations

TEST_CASE("relation composition, tensor and dual by definition") {
  std::mt19937_64 rng(13);
  auto sets = numbered_sets(3);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = sets[pick(rng)], b = sets[pick(rng)], c = sets[pick(rng)], d = sets[pick(rng)];
    auto r = random_relation(a, b, rng), s = random_relation(b, c, rng);
    auto rs = rel_compose(r, s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        bool expected = false;
        for (std::size_t j = 0; j < b.size(); ++j) expected |= r.holds(i, j) && s.holds(j, k);
        CHECK(rs.holds(i, k) == expected);
      }
    }
    auto t = random_relation(c, d, rng);
    auto rt = rel_tensor(r, t);
    for (std::size_t i1 = 0; i1 < a.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < c.size(); ++i2) {
        for (std::size_t j1 = 0; j1 < b.size(); ++j1) {
          for (std::size_t j2 = 0; j2 < d.size(); ++j2) {
            CHECK(rt.holds(pair_index(i1, i2, c.size()), pair_index(j1, j2, d.size())) ==
                  (r.holds(i1, j1) && t.holds(i2, j2)));
          }
        }
      }
    }
    auto rd = rel_dual(r);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) CHECK(rd.holds(j, i) == r.holds(i, j));
    }
  }
}

TEST_CASE("relation counit is the diagonal") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto e = rel_counit(numbered_set(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(e.holds(pair_index(i, j, n), 0) == (i == j));
    }
  }
  CHECK_THROWS_AS(make_rel(abc(), pq(), {1, 0}), Error);
}

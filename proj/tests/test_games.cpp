#include <doctest.h>

#include <filesystem>

#include "support.hpp"
#include "teleo/category.hpp"
#include "teleo/fingame.hpp"
#include "teleo/io.hpp"
#include "teleo/nash.hpp"

using namespace teleo;

namespace {

FinSet lr() { return make_set("LR", {"L", "R"}); }
FinSet pay() { return make_set("P", {"0", "1", "5/2"}); }

}  // namespace

TEST_CASE("a decision has one strategy per observation-indexed move") {
  auto obs = make_set("O", {"u", "v"});
  auto d = decision(obs, lr(), pay());
  CHECK(d.strategies.size() == 4);
  CHECK(d.dom == LensObject{obs, unit_set()});
  CHECK(d.cod == LensObject{lr(), pay()});
  CHECK_FALSE(d.strategically_trivial);
  // σ = (L at u, R at v) is index 1
  CHECK(d.P(1, 0) == 0);
  CHECK(d.P(1, 1) == 1);
  // context: L pays 1, R pays 5/2; at observation v only R-at-v strategies are best
  Context k{1, 2};
  auto r = d.best_response(1, k, 0);
  CHECK(r == Responses{0, 1, 0, 1});
  r = d.best_response(0, k, 0);
  CHECK(r == Responses{0, 0, 1, 1});
  CHECK_THROWS_AS(scalar_of(d), Error);
  CHECK_FALSE(game_dual(d).has_value());
}

TEST_CASE("lifted lenses are strategically trivial") {
  std::mt19937_64 rng(2);
  LensObject a{lr(), pay()}, b{pay(), lr()};
  auto l = random_lens(a, b, rng);
  auto g = lift_lens(l);
  CHECK(g.strategically_trivial);
  CHECK(g.strategies.size() == 1);
  CHECK(lens_eq(game_lens(g), l));
  auto ad = random_adaptor(a, b, rng);
  auto gd = game_dual(lift_lens(ad));
  REQUIRE(gd.has_value());
  CHECK(game_eq(*gd, lift_lens(lens_dual(ad))));
}

TEST_CASE("composite games multiply strategies and keep the unit laws") {
  auto obs = make_set("O", {"u", "v"});
  auto d1 = decision(obs, lr(), pay());
  auto d2 = decision(unit_set(), obs, make_set("Q", {"0", "3"}));
  auto t = game_tensor(d1, d2);
  CHECK(t.strategies.size() == d1.strategies.size() * d2.strategies.size());
  CHECK(game_eq(game_compose(game_id(d1.dom), d1), d1));
  CHECK(game_eq(game_compose(d1, game_id(d1.cod)), d1));
  auto s = game_sym(d1.dom, d2.dom);
  CHECK(game_eq(game_compose(s, game_sym(d2.dom, d1.dom)), game_id(s.dom)));
  CHECK(game_eq(game_compose(s, game_tensor(d2, d1)),
                game_compose(t, game_sym(d1.cod, d2.cod))));
}

TEST_CASE("game equality compares best responses") {
  auto a = decision(unit_set(), lr(), pay());
  auto b = a;
  b.best_response = [](std::size_t, const Context&, std::size_t) { return Responses(2, 1); };
  CHECK_FALSE(game_eq(a, b));
  CHECK(game_eq(a, a));
}

TEST_CASE("game permutation agrees with symmetries") {
  std::vector<LensObject> wires = {{lr(), pay()}, {unit_set(), lr()}, {pay(), unit_set()}};
  std::vector<std::size_t> perm = {2, 0, 1};
  CHECK(game_eq(permute<GameCategory>(wires, perm), permute_by_symmetries<GameCategory>(wires, perm)));
}

TEST_CASE("oracle on a fixed game") {
  ClassicalGame c;
  c.players = {"1", "2"};
  c.strategies = {lr(), lr()};
  // coordination: (L,L)=(1,1), (R,R)=(2,2), mismatches 0
  c.payoff = {{1, 1}, {0, 0}, {0, 0}, {2, 2}};
  auto r = oracle_nash(c);
  CHECK(r.equilibria == std::vector<std::size_t>{0, 3});
  CHECK(r.deviation_equilibria == r.equilibria);
}

TEST_CASE("composed two-player games match the deviation check") {
  Fig1Spec spec;
  spec.x = make_set("X", {"a", "b", "c"});
  spec.y = lr();
  auto q = [](int n) { return Rational(n); };
  spec.payoffs = {{{q(3), q(1)}, {q(0), q(0)}},
                  {{q(1), q(0)}, {q(2), q(3)}},
                  {{q(0), q(2)}, {q(1), q(1)}}};
  spec.partition = std::vector<std::vector<std::string>>{{"a", "c"}, {"b"}};
  for (auto v : {Fig1Variant::simultaneous, Fig1Variant::sequential, Fig1Variant::imperfect}) {
    CAPTURE(to_string(v));
    auto out = solve_fig1(build_fig1(v, spec));
    CHECK(out.tables_agree);
    CHECK(out.equilibria_agree);
    CHECK(out.equilibria == support::deviation_equilibria(v, spec));
  }
}

TEST_CASE("partitions are validated") {
  Fig1Spec spec;
  spec.x = lr();
  spec.y = lr();
  spec.payoffs = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
  auto bad = [&](std::vector<std::vector<std::string>> p) {
    spec.partition = p;
    try {
      build_fig1(Fig1Variant::imperfect, spec);
    } catch (const Error& e) {
      return e.code() == ErrorCode::invalid_partition;
    }
    return false;
  };
  CHECK(bad({{"L"}}));
  CHECK(bad({{"L", "R"}, {"R"}}));
  CHECK(bad({{"L"}, {}, {"R"}}));
  CHECK(bad({{"L", "Z"}, {"R"}}));
  spec.partition.reset();
  CHECK_THROWS_AS(build_fig1(Fig1Variant::imperfect, spec), Error);
}

TEST_CASE("game fixtures agree with the deviation check") {
  for (const auto& entry : std::filesystem::directory_iterator(TELEO_FIXTURES "/games")) {
    auto fixture = fixture_from_json(load_json(entry.path()));
    for (auto v : fixture.variants) {
      CAPTURE(fixture.name);
      CAPTURE(to_string(v));
      auto out = solve_fig1(build_fig1(v, fixture.spec));
      CHECK(out.tables_agree);
      CHECK(out.equilibria_agree);
      CHECK(out.equilibria == support::deviation_equilibria(v, fixture.spec));
    }
  }
}

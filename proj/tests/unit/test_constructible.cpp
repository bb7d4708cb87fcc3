#include <doctest.h>

#include <set>

#include "motcsm/constructible.hpp"
#include "motcsm/errors.hpp"
#include "motcsm/sampling.hpp"
#include "oracles.hpp"

using namespace motcsm;

namespace {
SurfaceModel one() { return SurfaceModel{}.apply(SurfaceEvent::generic()); }
SurfaceModel nested() { return one().apply(SurfaceEvent::on_curve(1)); }
}  // namespace

TEST_CASE("push-forward examples") {
  auto f = closure_indicator(one(), 1, 0);
  auto g = pushforward(one(), f);
  CHECK(g.generic_value == 0);
  CHECK(g.value_at("p1") == 2);

  g = pushforward(one(), weighted_unit(one(), 0));
  CHECK(g.is_constant(1));
  CHECK(g.value_at("p1") == 1);

  g = pushforward(one(), indicator(Stratum::open(), 0));
  CHECK(g.generic_value == 1);
  CHECK(g.value_at("p1") == 0);
  CHECK(g.corrections.at("p1") == -1);
  CHECK_FALSE(g.is_constant(1));

  CHECK_THROWS_AS(pushforward(one(), indicator(Stratum::curve(2), 0)), InputError);
}

TEST_CASE("weighted units") {
  auto w = weighted_unit(SurfaceModel{}, 0);
  CHECK(w.weights.size() == 1);
  CHECK(w.weights.at(Stratum::open()) == 1);
  w = weighted_unit(one(), 0);
  CHECK(w.weights.at(Stratum::curve(1)) == Rational(1, 2));
  w = weighted_unit(nested(), 0);
  CHECK(w.weights.at(Stratum::open()) == 1);
  CHECK(w.weights.at(Stratum::curve(1)) == Rational(1, 2));
  CHECK(w.weights.at(Stratum::curve(2)) == Rational(1, 3));
  CHECK(w.weights.at(Stratum::pair(1, 2)) == Rational(1, 6));
  CHECK(verify_unit_pushforward(one(), 1));
  CHECK(pushforward(one(), weighted_unit(one(), 1)).corrections.empty());
}

TEST_CASE("restriction to a fiber pushes to the point indicator") {
  const auto s = nested().apply(SurfaceEvent::generic());
  for (const char* p : {"p1", "p2"}) {
    const auto g = pushforward(s, restrict_to_fiber(s, weighted_unit(s, 0), p));
    CHECK(g.generic_value == 0);
    CHECK(g.value_at(p) == 1);
    CHECK(g.value_at(std::string(p) == "p1" ? "p2" : "p1") == 0);
  }
  CHECK_THROWS_AS(restrict_to_fiber(s, weighted_unit(s, 0), "p3"), InputError);
}

TEST_CASE("push-forward is linear") {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto s = SurfaceModel::from_events(random_surface_program(rng, 1 + static_cast<unsigned>(rng() % 6)));
    const auto strata = strata_of(relative_arrangement(s, 0));
    auto random_fn = [&] {
      ConstructibleFunction f;
      for (const auto& st : strata)
        if (rng() % 2) f.weights[st] = oracle::frac(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
      return f;
    };
    const auto f = random_fn();
    const auto g = random_fn();
    const Rational a = oracle::frac(static_cast<long>(rng() % 9) - 4, 3);
    const auto lhs = pushforward(s, a * f + g);
    const auto pf = pushforward(s, f);
    const auto pg = pushforward(s, g);
    CHECK(lhs.generic_value == a * pf.generic_value + pg.generic_value);
    for (const auto& [p, c] : lhs.corrections) CHECK(lhs.value_at(p) == a * pf.value_at(p) + pg.value_at(p));
  }
}

TEST_CASE("curve unions agree with the incidence graph") {
  Rng rng(37);
  for (int t = 0; t < 80; ++t) {
    const auto s = SurfaceModel::from_events(random_surface_program(rng, 1 + static_cast<unsigned>(rng() % 6)));
    const auto arr = relative_arrangement(s, 0);
    std::set<unsigned> chosen;
    for (unsigned j : arr.curves)
      if (rng() % 2) chosen.insert(j);
    // 1 on the union of the chosen closed curves
    ConstructibleFunction f;
    for (unsigned j : chosen) f.weights[Stratum::curve(j)] = 1;
    for (const auto& [a, b] : arr.pairs)
      if (chosen.count(a) || chosen.count(b)) f.weights[Stratum::pair(a, b)] = 1;
    const auto g = pushforward(s, f);
    for (unsigned p = 1; p <= arr.base_points; ++p) {
      // a tree of rational curves: 2 per curve, minus 1 per node
      long expected = 0;
      for (unsigned j : chosen)
        if (arr.base_point.at(j) == p) expected += 2;
      for (const auto& [a, b] : arr.pairs)
        if (chosen.count(a) && chosen.count(b) && arr.base_point.at(a) == p) expected -= 1;
      CHECK(g.value_at(base_point_name(p)) == expected);
    }
    CHECK(g.generic_value == 0);
    auto closures = ConstructibleFunction{};
    for (unsigned j : chosen) closures += closure_indicator(s, j, 0);
    // sum of closures counts nodes inside the union twice
    for (unsigned p = 1; p <= arr.base_points; ++p) {
      long nodes = 0;
      for (const auto& [a, b] : arr.pairs)
        if (chosen.count(a) && chosen.count(b) && arr.base_point.at(a) == p) ++nodes;
      CHECK(pushforward(s, closures).value_at(base_point_name(p)) == g.value_at(base_point_name(p)) + nodes);
    }
  }
}

TEST_CASE("unit push-forward on random surfaces and stages") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto s = SurfaceModel::from_events(random_surface_program(rng, static_cast<unsigned>(rng() % 7)));
    for (unsigned m = 0; m <= s.blowups(); ++m) CHECK(verify_unit_pushforward(s, m));
  }
}

TEST_CASE("stage mismatch") {
  auto f = indicator(Stratum::open(), 0);
  CHECK_THROWS_AS(f += indicator(Stratum::open(), 1), InputError);
}

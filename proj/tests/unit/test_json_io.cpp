#include <doctest.h>

#include "motcsm/errors.hpp"
#include "motcsm/json_io.hpp"
#include "motcsm/sampling.hpp"

using namespace motcsm;

TEST_CASE("class encodings") {
  const MotivicClass c(LPolynomial(std::vector<Integer>{1, -2, 1}), {2, 1});
  const Json j = to_json(c);
  CHECK(j.at("numerator") == "1 + -2*L + 1*L^2");
  CHECK(j.at("denominator") == Json::array({1, 2}));
  CHECK(class_from_json(j) == c);
  CHECK(class_from_json(Json("L^2 + L + 1")) == projective_class(2));
  CHECK(class_from_json(Json(3)) == MotivicClass(3));
  CHECK(class_from_json(Json::array({0, 1})) == affine_class(1));
  CHECK_THROWS_AS(class_from_json(Json::object()), InputError);
  CHECK_THROWS_AS(class_from_json(Json{{"numerator", "1"}, {"denominator", {-1}}}), InputError);
  CHECK_THROWS_AS(class_from_json(Json(true)), InputError);
}

TEST_CASE("rational encodings") {
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_from_json(Json("6/8")) == Rational(3, 4));
  CHECK(rational_from_json(Json(-2)) == -2);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), InputError);
}

TEST_CASE("systems round trip") {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_system(rng, {});
    const auto back = system_from_json(to_json(s));
    CHECK(to_json(back) == to_json(s));
    CHECK(chi(back, full_locus(back)) == chi(s, full_locus(s)));
  }
  CHECK_THROWS_AS(system_from_json(Json{{"ambient_dim", 2}}), InputError);
  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"ambient_dim": 2, "divisors": [],
      "strata": [{"subset": ["x"], "class": 1}]})")),
                  InputError);
}

TEST_CASE("programs") {
  const Json j = Json::parse(R"({
    "initial": {"ambient_dim": 2, "strata": [{"subset": [], "class": "1 + L + L^2"}],
                "loci": [{"name": "fiber", "strata": [{"subset": [], "class": 1}]}]},
    "steps": [
      {"codim": 2, "center_strata": [{"subset": [], "class": 1}],
       "locus_defaults": {"fiber": "contains_center"}},
      {"codim": 2, "containing": ["exc1"], "center_strata": [{"subset": ["exc1"], "class": 1}],
       "locus_defaults": {"fiber": "contains_center"}}
    ]})");
  const auto p = program_from_json(j);
  CHECK(p.steps.size() == 2);
  CHECK(p.steps[1].containing == 1);
  const auto run = run_program(p);
  CHECK(run.result.divisors[1].id == "exc2");
  CHECK(chi(run.result, run.result.loci[0]) == MotivicClass(1));

  Json bad = j;
  bad["steps"][1]["containing"] = {"exc9"};
  try {
    program_from_json(bad);
    FAIL("expected an error");
  } catch (const BlowupStepError& e) {
    CHECK(e.step() == 2);
  }
  bad = j;
  bad["steps"][0]["locus_defaults"]["fiber"] = "sometimes";
  CHECK_THROWS_AS(program_from_json(bad), InputError);
}

TEST_CASE("surface events") {
  const std::vector<SurfaceEvent> ev{SurfaceEvent::generic(), SurfaceEvent::on_curve(1),
                                     SurfaceEvent::intersection(1, 2)};
  CHECK(surface_events_from_json(to_json(ev)) == ev);
  CHECK(surface_events_from_json(to_json(ev).at("events")) == ev);
  CHECK_THROWS_AS(surface_events_from_json(Json::parse(R"([{"type": "line"}])")), InputError);
  CHECK_THROWS_AS(surface_events_from_json(Json::parse(R"([{"type": "intersection", "pair": [1]}])")),
                  InputError);
}

TEST_CASE("constructible functions") {
  const auto f = function_from_json(Json::parse(R"({"stage": 0, "weights": [
      {"stratum": [], "weight": 1}, {"stratum": [1], "weight": "1/2"},
      {"stratum": [2, 1], "weight": "1/6"}]})"));
  CHECK(f.weights.at(Stratum::pair(1, 2)) == Rational(1, 6));
  CHECK(function_from_json(to_json(f)).weights == f.weights);
  CHECK_THROWS_AS(function_from_json(Json::parse(R"({"weights": [{"stratum": [1, 2, 3], "weight": 1}]})")),
                  InputError);

  BaseFunction g{1, {{"p1", Rational(-1)}}};
  const Json gj = to_json(g);
  CHECK(gj.at("generic") == "1");
  CHECK(gj.at("values").at("p1") == "0");
}

TEST_CASE("chow classes") {
  ChowClass c(2);
  c.top() = 1;
  c.h() = 3;
  c.e(1) = Rational(-3, 2);
  c.points() = 3;
  const Json j = to_json(c);
  CHECK(j.at("e") == Json::array({"-3/2", "0"}));
  CHECK(j.at("text") == "[Z] + 3*h - 3/2*e1 + 3*[pt]");
}

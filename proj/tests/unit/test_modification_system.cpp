#include <doctest.h>

#include "motcsm/blowup.hpp"
#include "motcsm/errors.hpp"
#include "motcsm/modification_system.hpp"
#include "motcsm/sampling.hpp"

using namespace motcsm;

namespace {
LPolynomial poly(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return LPolynomial(std::move(v));
}

ModificationSystem blown_up_plane() {
  ModificationSystem s;
  s.ambient_dim = 2;
  s.divisors = {{"e0", 1}};
  s.strata = {{0, MotivicClass(poly({0, 1, 1}))}, {1, MotivicClass(poly({1, 1}))}};
  s.loci = {{"fiber", {{1, MotivicClass(poly({1, 1}))}}}};
  return s;
}
}  // namespace

TEST_CASE("validate") {
  auto trivial = ModificationSystem::trivial(2, projective_class(2));
  CHECK(validate(trivial).empty());

  auto deep = blown_up_plane();
  deep.divisors = {{"a", 1}, {"b", 1}, {"c", 1}};
  deep.strata[0b111] = MotivicClass(1);
  auto v = validate(deep);
  REQUIRE(v.size() == 1);
  CHECK(v[0].subset == 0b111);
  CHECK(v[0].subset_ids == std::vector<std::string>{"a", "b", "c"});

  auto wrong_total = blown_up_plane();
  wrong_total.declared_total = projective_class(2);
  CHECK(validate(wrong_total).size() == 1);
  wrong_total.declared_total = MotivicClass(poly({1, 2, 1}));
  CHECK(validate(wrong_total).empty());

  auto unknown = blown_up_plane();
  unknown.strata[0b10] = MotivicClass(1);
  CHECK_FALSE(validate(unknown).empty());

  auto dup = blown_up_plane();
  dup.divisors.push_back({"e0", 2});
  CHECK_FALSE(validate(dup).empty());

  auto locus_off = blown_up_plane();
  locus_off.divisors.push_back({"e1", 1});
  locus_off.loci[0].strata[0b10] = MotivicClass(1);
  CHECK_FALSE(validate(locus_off).empty());

  auto zero_dim = trivial;
  zero_dim.ambient_dim = 0;
  CHECK_FALSE(validate(zero_dim).empty());
}

TEST_CASE("ids and subsets") {
  auto s = blown_up_plane();
  s.divisors.push_back({"e1", 2});
  const std::vector<std::string> ids{"e1", "e0"};
  CHECK(s.subset_of(ids) == 0b11);
  CHECK(s.ids_of(0b10) == std::vector<std::string>{"e1"});
  CHECK(s.index_of("e1") == 1u);
  CHECK_FALSE(s.index_of("x"));
  const std::vector<std::string> bad{"x"};
  CHECK_THROWS_AS(s.subset_of(bad), InputError);
}

TEST_CASE("chi of the blown-up plane") {
  const auto s = blown_up_plane();
  CHECK(chi(s, full_locus(s)) == projective_class(2));
  CHECK(chi(s, s.loci[0]) == MotivicClass(1));
  CHECK(euler_chi(s, s.loci[0]) == 1);
  CHECK(euler_chi(s, full_locus(s)) == 3);
  CHECK(euler_chi(s, MarkedLocus{"empty", {}}) == 0);
  const auto full = full_locus(s);
  CHECK(full.name == "full");
  CHECK(full.strata.size() == 2);
  CHECK(full.stratum(1) == MotivicClass(poly({1, 1})));
}

TEST_CASE("trivial system") {
  const auto c = MotivicClass(poly({3, 0, 2}));
  const auto t = ModificationSystem::trivial(2, projective_class(2));
  CHECK(chi(t, MarkedLocus{"u", {{0, c}}}) == c);
  CHECK(full_locus(t).strata.at(0) == projective_class(2));
  CHECK(euler_specialize(chi(t, full_locus(t))) == 3);
}

TEST_CASE("chi is linear in the locus") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto s = random_system(rng, {});
    REQUIRE(s.loci.size() == 2);
    const Integer a = static_cast<long>(rng() % 7) - 3;
    const Integer b = static_cast<long>(rng() % 7) - 3;
    const auto mixed = combine(a, s.loci[0], b, s.loci[1]);
    const auto expected = MotivicClass(LPolynomial(std::vector<Integer>{a})) * chi(s, s.loci[0]) +
                          MotivicClass(LPolynomial(std::vector<Integer>{b})) * chi(s, s.loci[1]);
    CHECK(chi(s, mixed) == expected);
    CHECK(euler_chi(s, mixed) == euler_specialize(chi(s, mixed)));
    CHECK(validate(s).empty());
  }
}

TEST_CASE("engine output satisfies the change of variables") {
  Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    const auto ambient = random_class(rng, 3, 0, 1);
    ModificationSystem s = ModificationSystem::trivial(3, ambient.is_zero() ? MotivicClass(1) : ambient);
    const auto c0 = chi(s, full_locus(s));
    for (int step = 0; step < 4; ++step) s = blow_up(s, random_center(rng, s));
    CHECK(chi(s, full_locus(s)) == c0);
  }
}

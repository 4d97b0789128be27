#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cmtop/monomial_ideal.hpp"
#include "helpers.hpp"

using cmtop::ExponentVector;
using cmtop::FaceSet;
using cmtop::MonomialIdeal;
using testutil::make_ideal;

TEST_CASE("minimalize keeps the divisibility antichain") {
  const auto ideal = make_ideal(2, {{2, 0}, {1, 1}, {3, 1}});
  REQUIRE(ideal.generators() == std::vector<ExponentVector>{{1, 1}, {2, 0}});

  const auto zero = make_ideal(3, {});
  REQUIRE(zero.is_zero());
  REQUIRE_FALSE(zero.is_unit());

  // already-minimal pair stays put
  const auto example = make_ideal(3, {{3, 1, 2}, {0, 2, 4}});
  REQUIRE(example.generators() == std::vector<ExponentVector>{{0, 2, 4}, {3, 1, 2}});
}

TEST_CASE("minimalize is idempotent and order-independent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto ideal = testutil::random_ideal(rng, 4, 4, 8);
    auto gens = ideal.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    const auto again = MonomialIdeal::minimalize(gens, ideal.var_count());
    REQUIRE(again == ideal);
  }
}

TEST_CASE("minimalize validates input") {
  REQUIRE_THROWS_AS(make_ideal(2, {{-1, 0}}), cmtop::InputError);
  REQUIRE_THROWS_AS(make_ideal(2, {{1, 0, 0}}), cmtop::InputError);
  REQUIRE_THROWS_AS(make_ideal(1, {{(std::int64_t{1} << 20) + 1}}), cmtop::InputError);
}

TEST_CASE("membership is generator divisibility") {
  const auto ideal = make_ideal(2, {{2, 0}, {1, 1}});
  REQUIRE_FALSE(ideal.contains({1, 0}));
  REQUIRE(ideal.contains({2, 3}));
  REQUIRE_THROWS_AS(ideal.contains({-1, 0}), cmtop::InputError);

  const auto example = make_ideal(3, {{3, 1, 2}, {0, 2, 4}});
  REQUIRE(example.contains({3, 1, 2}));
}

TEST_CASE("lcm exponent") {
  REQUIRE(make_ideal(2, {{2, 0}, {1, 1}}).lcm_exponent() == ExponentVector{2, 1});
  REQUIRE(make_ideal(3, {{3, 1, 2}, {0, 2, 4}}).lcm_exponent() == ExponentVector{3, 2, 4});
  REQUIRE(make_ideal(2, {{1, 1}}).lcm_exponent() == ExponentVector{1, 1});
  REQUIRE(make_ideal(2, {}).lcm_exponent() == ExponentVector{0, 0});
}

TEST_CASE("krull dimension against subset-enumeration oracle") {
  const auto xy = make_ideal(2, {{2, 0}, {1, 1}});
  REQUIRE(testutil::brute_krull_dimension(xy) == 1);  // oracle first
  REQUIRE(xy.krull_dimension() == 1);

  REQUIRE(make_ideal(4, {}).krull_dimension() == 4);

  const auto cross = make_ideal(2, {{1, 1}});
  REQUIRE(testutil::brute_krull_dimension(cross) == 1);
  REQUIRE(cross.krull_dimension() == 1);

  const auto unit = make_ideal(2, {{0, 0}});
  REQUIRE(unit.is_unit());
  REQUIRE_THROWS_AS(unit.krull_dimension(), cmtop::InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ideal = testutil::random_ideal(rng, 4, 3, 6);
    REQUIRE(ideal.krull_dimension() == testutil::brute_krull_dimension(ideal));
  }
}

TEST_CASE("localization saturates correctly") {
  const auto ideal = make_ideal(2, {{2, 0}, {1, 1}});
  REQUIRE(ideal.localization_is_field_at({1, 0}, FaceSet()));
  REQUIRE_FALSE(ideal.localization_is_field_at({1, 0}, FaceSet().with(1)));
  // S_F vanishes in degree a when F misses supp(a_-)
  REQUIRE_FALSE(ideal.localization_is_field_at({-1, 0}, FaceSet()));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const auto random = testutil::random_ideal(rng, 3, 3, 5);
    if (random.is_unit()) continue;
    const int n = random.var_count();
    for (int rep = 0; rep < 10; ++rep) {
      ExponentVector a(static_cast<std::size_t>(n));
      for (auto& e : a) e = static_cast<std::int64_t>(rng() % 7) - 3;
      const FaceSet f(static_cast<std::uint32_t>(rng()) &
                      FaceSet::full(n).bits());
      REQUIRE(random.localization_is_field_at(a, f) ==
              testutil::brute_localization_is_field(random, a, f));
    }
  }
}

TEST_CASE("standard monomials in a box") {
  const auto ideal = make_ideal(2, {{2, 0}, {1, 1}});
  const auto got = ideal.standard_monomials_in_box({2, 2});
  const std::vector<ExponentVector> want{{0, 0}, {0, 1}, {0, 2}, {1, 0}};
  REQUIRE(got == want);

  REQUIRE(make_ideal(2, {}).standard_monomials_in_box({1, 1}).size() == 4);

  const auto example = make_ideal(3, {{3, 1, 2}, {0, 2, 4}});
  REQUIRE(example.standard_monomials_in_box({0, 0, 0}) ==
          std::vector<ExponentVector>{{0, 0, 0}});
}

TEST_CASE("standard monomials are closed under divisors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = testutil::random_ideal(rng, 3, 3, 5);
    auto bound = ideal.lcm_exponent();
    for (auto& e : bound) e += 1;
    for (const auto& b : ideal.standard_monomials_in_box(bound)) {
      ExponentVector smaller(b);
      for (auto& e : smaller)
        if (e > 0 && rng() % 2) --e;
      REQUIRE_FALSE(ideal.contains(smaller));
    }
  }
}

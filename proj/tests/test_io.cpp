#include <catch2/catch_amalgamated.hpp>

#include "cmtop/io.hpp"
#include "helpers.hpp"

using cmtop::ExponentVector;
using testutil::make_ideal;

TEST_CASE("ideal json round trip") {
  const auto ideal = make_ideal(3, {{3, 1, 2}, {0, 2, 4}});
  const auto j = cmtop::ideal_to_json(ideal);
  REQUIRE(j["n"] == 3);
  REQUIRE(cmtop::ideal_from_json(j) == ideal);

  const auto parsed = cmtop::ideal_from_string(
      R"({"n": 3, "generators": [[3,1,2],[0,2,4]]})");
  REQUIRE(parsed == ideal);

  REQUIRE_THROWS_AS(cmtop::ideal_from_string(R"({"n": 2})"), cmtop::InputError);
  REQUIRE_THROWS_AS(cmtop::ideal_from_string("{broken"), cmtop::InputError);
}

TEST_CASE("ideal text format") {
  const auto ideal = cmtop::ideal_from_text("x1^3 x2 x3^2\nx2^2 x3^4\n");
  REQUIRE(ideal == make_ideal(3, {{3, 1, 2}, {0, 2, 4}}));

  // caret optional, repeated factors multiply, blank lines ignored
  const auto same = cmtop::ideal_from_text("x1 x1 x2\n\nx1^2\n");
  REQUIRE(same == make_ideal(2, {{2, 1}, {2, 0}}));

  const auto unit = cmtop::ideal_from_text("1\n");
  REQUIRE(unit.is_unit());

  REQUIRE_THROWS_AS(cmtop::ideal_from_text("y2\n"), cmtop::InputError);
  REQUIRE_THROWS_AS(cmtop::ideal_from_text("x^2\n"), cmtop::InputError);
}

TEST_CASE("complex serialization") {
  const auto irr = cmtop::SimplicialComplex::irrelevant(cmtop::FaceSet::full(2));
  auto j = cmtop::complex_to_json(irr);
  REQUIRE(j["ground"] == cmtop::ordered_json::array({1, 2}));
  REQUIRE(j["facets"] == cmtop::ordered_json::array({cmtop::ordered_json::array()}));
  REQUIRE(j["void"] == false);

  const auto v = cmtop::SimplicialComplex::void_complex(cmtop::FaceSet::full(2));
  j = cmtop::complex_to_json(v);
  REQUIRE(j["facets"].empty());
  REQUIRE(j["void"] == true);
}

TEST_CASE("report schema key order") {
  const auto ideal = make_ideal(2, {{2, 0}, {1, 1}});
  const auto k = cmtop::FieldSpec::rationals();
  const auto verdict = cmtop::is_cohen_macaulay(ideal, k);
  const auto j = cmtop::report_to_json(
      ideal, k, verdict, cmtop::local_cohomology_table(ideal, k),
      cmtop::betti_table(ideal, k), cmtop::ext_table(ideal, k),
      cmtop::standard_pairs(ideal), cmtop::quasidegree_arrangement(ideal, k));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys == std::vector<std::string>{"ideal", "field", "dim", "depth", "pd",
                                           "cm", "witnesses", "lc_table",
                                           "betti_table", "ext_table",
                                           "standard_pairs", "noncm_locus"});
  REQUIRE(j["dim"] == 1);
  REQUIRE(j["depth"] == 0);
  REQUIRE(j["cm"] == false);
}

TEST_CASE("polynomial serialization keeps exact coefficients") {
  const auto poly = cmtop::distraction_monomial({3});
  const auto j = cmtop::polynomial_to_json(poly);
  // x(x-1)(x-2) = x^3 - 3x^2 + 2x
  REQUIRE(j["terms"].size() == 3);
  REQUIRE(j["terms"][0]["coeff"] == 2);
  REQUIRE(j["terms"][0]["exp"] == cmtop::ordered_json::array({1}));
}

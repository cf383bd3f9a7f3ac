#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammalift/weights.hpp"

#include <stdexcept>

using namespace gammalift;

TEST_CASE("sigma witness for standard and scaled weights") {
  auto std3 = make_weight_list(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  REQUIRE(std3.sigma.has_value());
  for (const auto& lam : std3.weights)
    CHECK(weight_pairing(lam, *std3.sigma) == BigRational(1));
  CHECK(is_admissible(std3));
  CHECK(is_faithful(std3));

  auto doubled = make_weight_list(1, {{2}});
  REQUIRE(doubled.sigma.has_value());
  CHECK((*doubled.sigma)[0] == BigRational(1, 2));
  CHECK(is_faithful(doubled));

  auto pair = make_weight_list(1, {{1}, {1}});
  REQUIRE(pair.sigma.has_value());
  CHECK((*pair.sigma)[0] == BigRational(1));
}

TEST_CASE("inadmissible and unfaithful weight lists") {
  // the sum weight pairs to 2 against any sigma fixing the first two
  auto tri = make_weight_list(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(!tri.sigma.has_value());
  CHECK(!is_admissible(tri));
  CHECK(is_faithful(tri));

  auto thin = make_weight_list(2, {{1, 0}});
  CHECK(thin.sigma.has_value());
  CHECK(!is_faithful(thin));

  auto opposite = make_weight_list(1, {{1}, {-1}});
  CHECK(!opposite.sigma.has_value());
  CHECK(is_faithful(opposite));
}

TEST_CASE("positive witnesses for pointed cones") {
  // Admissible lists reuse sigma.
  auto std2 = make_weight_list(2, {{1, 0}, {0, 1}});
  auto w = solve_positive_witness(std2);
  REQUIRE(w.has_value());
  for (const auto& lam : std2.weights)
    CHECK(weight_pairing(lam, *w) > BigRational(0));

  // No sigma here, but the cone is pointed; least squares finds a witness.
  auto tri = make_weight_list(2, {{1, 0}, {0, 1}, {1, 1}});
  auto wt = solve_positive_witness(tri);
  REQUIRE(wt.has_value());
  for (const auto& lam : tri.weights)
    CHECK(weight_pairing(lam, *wt) > BigRational(0));

  // Opposite weights span a line: no witness exists.
  auto opposite = make_weight_list(1, {{1}, {-1}});
  CHECK(!solve_positive_witness(opposite).has_value());

  // A zero weight can never pair positively.
  auto degenerate = make_weight_list(2, {{0, 0}, {1, 0}});
  CHECK(!solve_positive_witness(degenerate).has_value());
}

TEST_CASE("weight list validation") {
  CHECK_THROWS_AS(make_weight_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_weight_list(2, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(weight_pairing({1, 2}, {BigRational(1)}), std::invalid_argument);
}

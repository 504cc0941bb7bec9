#include <doctest.h>

#include "polyboson/algebra.hpp"
#include "polyboson/sampling.hpp"

using namespace polyboson;

TEST_CASE("make_algebra validation") {
  CHECK(make_algebra(1, {Rational(0), Rational(2)}) == preset_su2());
  CHECK_NOTHROW(make_algebra(0, {Rational(0)}));  // abelian [J+,J-] = 0
  CHECK_THROWS_AS(make_algebra(2, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(2, {Rational(1), Rational(1), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(-1, {}), std::invalid_argument);
}

TEST_CASE("presets") {
  CHECK(preset_su2().coeffs == std::vector<Rational>{Rational(0), Rational(2)});
  CHECK(preset_su11().coeffs == std::vector<Rational>{Rational(0), Rational(-2)});
  AlgebraSpec higgs = preset_higgs(Rational(2), Rational(1, 3));
  CHECK(higgs.n == 3);
  CHECK(higgs.coeffs == std::vector<Rational>{Rational(0), Rational(2), Rational(0), Rational(1, 3)});
  CHECK_THROWS_AS(preset_higgs(Rational(2), Rational(0)), std::invalid_argument);
  AlgebraSpec quad = preset_quadratic(Rational(1), Rational(2), Rational(1, 2));
  CHECK(quad.n == 2);
}

TEST_CASE("rhs_coefficient_table") {
  CHECK(rhs_coefficient_table(preset_su2()) ==
        std::vector<std::pair<long, Rational>>{{1, Rational(2)}});
  CHECK(rhs_coefficient_table(preset_higgs(Rational(2), Rational(1, 3))) ==
        std::vector<std::pair<long, Rational>>{{1, Rational(2)}, {3, Rational(1, 3)}});
  CHECK(rhs_coefficient_table(make_algebra(2, {Rational(1), Rational(0), Rational(5)})) ==
        std::vector<std::pair<long, Rational>>{{0, Rational(1)}, {2, Rational(5)}});
}

TEST_CASE("table reconstructs coeffs exactly") {
  Sampler sampler(11);
  for (int k = 0; k < 50; ++k) {
    AlgebraSpec alg = sampler.algebra(6);
    std::vector<Rational> rebuilt(alg.coeffs.size(), Rational(0));
    for (const auto& [i, c] : rhs_coefficient_table(alg)) {
      CHECK(!c.is_zero());
      rebuilt[i] = c;
    }
    CHECK(rebuilt == alg.coeffs);
  }
}

#include <doctest.h>

#include "polyboson/pbw.hpp"
#include "polyboson/sampling.hpp"

using namespace polyboson;

namespace {

UEAElement single(long m1, long m2, long m3, Rational c = Rational(1)) {
  UEAElement e;
  add_term(e, {m1, m2, m3}, c);
  return e;
}

// sum_i c_i rho(J3)^i x, applied symbolically.
UEAElement rhs_polynomial(const AlgebraSpec& alg, const UEAElement& x) {
  UEAElement out;
  UEAElement power = x;
  for (long i = 0; i <= alg.n; ++i) {
    if (i > 0) power = master_action(alg, Generator::J3, power);
    out = add(out, scale(alg.coeffs[i], power));
  }
  return out;
}

QuotientElement rhs_polynomial_quotient(const AlgebraSpec& alg, Ideal ideal,
                                        const Rational& param, const QuotientElement& x) {
  QuotientElement out;
  QuotientElement power = x;
  for (long i = 0; i <= alg.n; ++i) {
    if (i > 0) power = induced_action(alg, ideal, param, Generator::J3, power);
    for (const auto& [m, c] : power) add_term(out, m, alg.coeffs[i] * c);
  }
  return out;
}

}  // namespace

TEST_CASE("master action examples") {
  AlgebraSpec su2 = preset_su2();
  UEAElement expect;
  add_term(expect, {1, 1, 0}, Rational(1));
  add_term(expect, {0, 0, 1}, Rational(-2));
  CHECK(master_action(su2, Generator::Jminus, PBWMonomial{1, 0, 0}) == expect);

  CHECK(master_action(su2, Generator::Jplus, PBWMonomial{0, 0, 0}) == single(1, 0, 0));
  CHECK(master_action(su2, Generator::Jminus, PBWMonomial{0, 5, 7}) == single(0, 6, 7));

  UEAElement j3;
  add_term(j3, {2, 1, 1}, Rational(1));
  add_term(j3, {2, 1, 0}, Rational(1));
  CHECK(master_action(su2, Generator::J3, PBWMonomial{2, 1, 0}) == j3);
}

TEST_CASE("master representation closes the defining relations") {
  Sampler sampler(101);
  for (int trial = 0; trial < 8; ++trial) {
    AlgebraSpec alg = sampler.algebra(6);
    for (long m1 = 0; m1 <= 6; m1 += 2)
      for (long m2 = 0; m2 <= 6; m2 += 3)
        for (long m3 = 0; m3 <= 6; m3 += 3) {
          UEAElement x = single(m1, m2, m3);
          auto J3x = master_action(alg, Generator::J3, x);
          auto Jpx = master_action(alg, Generator::Jplus, x);
          auto Jmx = master_action(alg, Generator::Jminus, x);
          CHECK(add(master_action(alg, Generator::J3, Jpx), scale(Rational(-1), master_action(alg, Generator::Jplus, J3x))) == Jpx);
          CHECK(add(master_action(alg, Generator::J3, Jmx), scale(Rational(-1), master_action(alg, Generator::Jminus, J3x))) == scale(Rational(-1), Jmx));
          CHECK(add(master_action(alg, Generator::Jplus, Jmx), scale(Rational(-1), master_action(alg, Generator::Jminus, Jpx))) == rhs_polynomial(alg, x));
        }
  }
}

TEST_CASE("indecomposability: m2 and m3 never decrease") {
  Sampler sampler(55);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraSpec alg = sampler.algebra(6);
    PBWMonomial x{sampler.uniform_int(0, 5), sampler.uniform_int(0, 5), sampler.uniform_int(0, 5)};
    for (Generator g : {Generator::J3, Generator::Jplus, Generator::Jminus})
      for (const auto& [y, c] : master_action(alg, g, x)) {
        CHECK(y.m2 >= x.m2);
        CHECK(y.m3 >= x.m3);
      }
  }
}

TEST_CASE("induced action I1 examples") {
  AlgebraSpec su2 = preset_su2();
  Rational j(3, 2);
  QuotientElement e = induced_action_I1(su2, j, Generator::J3, {Ideal::I1, 0, 0});
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->second == j);

  QuotientElement lower = induced_action_I1(su2, j, Generator::Jminus, {Ideal::I1, 1, 0});
  QuotientElement expect;
  add_term(expect, {Ideal::I1, 1, 1}, Rational(1));
  add_term(expect, {Ideal::I1, 0, 0}, Rational(-2) * j);
  CHECK(lower == expect);

  QuotientElement raise = induced_action_I1(su2, j, Generator::Jplus, {Ideal::I1, 2, 3});
  QuotientElement expect_raise;
  add_term(expect_raise, {Ideal::I1, 3, 3}, Rational(1));
  CHECK(raise == expect_raise);

  CHECK_THROWS_AS(induced_action_I1(su2, j, Generator::J3, {Ideal::I2, 0, 0}), std::invalid_argument);
}

TEST_CASE("induced action I2 examples") {
  AlgebraSpec su2 = preset_su2();
  Rational lam(5, 3);

  QuotientElement low = induced_action_I2(su2, lam, Generator::Jminus, {Ideal::I2, 0, 2});
  QuotientElement expect;
  add_term(expect, {Ideal::I2, 0, 0}, lam);
  add_term(expect, {Ideal::I2, 0, 1}, lam * Rational(2));
  add_term(expect, {Ideal::I2, 0, 2}, lam);
  CHECK(low == expect);

  QuotientElement vac = induced_action_I2(su2, lam, Generator::Jminus, {Ideal::I2, 0, 0});
  QuotientElement expect_vac;
  add_term(expect_vac, {Ideal::I2, 0, 0}, lam);
  CHECK(vac == expect_vac);

  QuotientElement one = induced_action_I2(su2, lam, Generator::Jminus, {Ideal::I2, 1, 0});
  QuotientElement expect_one;
  add_term(expect_one, {Ideal::I2, 1, 0}, lam);
  add_term(expect_one, {Ideal::I2, 0, 1}, Rational(-2));
  CHECK(one == expect_one);
}

TEST_CASE("induced action I3 examples") {
  AlgebraSpec su2 = preset_su2();
  Rational kap(-2);

  QuotientElement diag = induced_action_I3(su2, kap, Generator::J3, {Ideal::I3, 4, 0});
  REQUIRE(diag.size() == 1);
  CHECK(diag.begin()->second == kap + Rational(4));

  CHECK(induced_action_I3(su2, kap, Generator::Jminus, {Ideal::I3, 0, 0}).empty());

  QuotientElement two = induced_action_I3(su2, kap, Generator::Jminus, {Ideal::I3, 2, 0});
  QuotientElement expect;
  add_term(expect, {Ideal::I3, 1, 0}, -(Rational(4) * kap + Rational(2)));
  CHECK(two == expect);
}

TEST_CASE("all induced representations close the defining relations") {
  Sampler sampler(77);
  for (int trial = 0; trial < 6; ++trial) {
    AlgebraSpec alg = sampler.algebra(6);
    Rational param = sampler.rational();
    for (Ideal ideal : {Ideal::I1, Ideal::I2, Ideal::I3}) {
      for (long ea = 0; ea <= 6; ea += 2)
        for (long eb = 0; eb <= (ideal == Ideal::I3 ? 0 : 6); eb += 3) {
          QuotientElement x;
          add_term(x, {ideal, ea, eb}, Rational(1));
          auto act = [&](Generator g, const QuotientElement& e) {
            return induced_action(alg, ideal, param, g, e);
          };
          auto J3x = act(Generator::J3, x);
          auto Jpx = act(Generator::Jplus, x);
          auto Jmx = act(Generator::Jminus, x);

          auto comm = [&](const QuotientElement& a, const QuotientElement& b) {
            QuotientElement out = a;
            for (const auto& [m, c] : b) add_term(out, m, -c);
            return out;
          };
          CHECK(comm(act(Generator::J3, Jpx), act(Generator::Jplus, J3x)) == Jpx);
          QuotientElement neg_jm;
          for (const auto& [m, c] : Jmx) add_term(neg_jm, m, -c);
          CHECK(comm(act(Generator::J3, Jmx), act(Generator::Jminus, J3x)) == neg_jm);
          CHECK(comm(act(Generator::Jplus, Jmx), act(Generator::Jminus, Jpx)) ==
                rhs_polynomial_quotient(alg, ideal, param, x));
        }
    }
  }
}

TEST_CASE("master action mod I1 reproduces the induced action") {
  Sampler sampler(13);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraSpec alg = sampler.algebra(5);
    Rational lam = sampler.rational();
    for (Generator g : {Generator::J3, Generator::Jplus, Generator::Jminus}) {
      long m1 = sampler.uniform_int(0, 5), m2 = sampler.uniform_int(0, 5);
      // Substitute X(m1,m2,m3) -> lam^{m3} X(m1,m2) in the master action of a
      // monomial with m3 = 0.
      QuotientElement reduced;
      for (const auto& [y, c] : master_action(alg, g, PBWMonomial{m1, m2, 0}))
        add_term(reduced, {Ideal::I1, y.m1, y.m2}, c * lam.pow(y.m3));
      CHECK(reduced == induced_action_I1(alg, lam, g, {Ideal::I1, m1, m2}));
    }
  }
}

TEST_CASE("swap_power coefficients") {
  auto c = swap_power(1, 0, true, 1);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Rational(1));  // [J3, J+] = J+

  CHECK(swap_power(0, 3, false, 2).empty());

  auto c2 = swap_power(2, 0, false, 3);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == Rational(9));   // binom(2,0)(-3)^2
  CHECK(c2[1] == Rational(-6));  // binom(2,1)(-3)^1
}

TEST_CASE("commute_lowering_raising polynomials") {
  AlgebraSpec su2 = preset_su2();
  auto d1 = commute_lowering_raising(su2, 1);
  CHECK(d1.raising_power == 0);
  CHECK(d1.poly == std::vector<Rational>{Rational(0), Rational(2)});

  auto d2 = commute_lowering_raising(su2, 2);
  CHECK(d2.raising_power == 1);
  CHECK(d2.poly == std::vector<Rational>{Rational(2), Rational(4)});  // 4 J3 + 2

  AlgebraSpec constant = make_algebra(0, {Rational(5)});
  auto d3 = commute_lowering_raising(constant, 3);
  CHECK(d3.raising_power == 2);
  CHECK(d3.poly == std::vector<Rational>{Rational(15)});

  CHECK_THROWS_AS(commute_lowering_raising(su2, 0), std::invalid_argument);
}

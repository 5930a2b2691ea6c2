#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"
#include "glmcr/rational.hpp"
#include "glmcr/varset.hpp"

using namespace glmcr;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rat(6, 4).str() == "3/2");
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(8, 4).str() == "2");
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat(3, 9).denominator() == 3);
}

TEST_CASE("parse round-trips the p/q form") {
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse(Rat(-22, 7).str()) == Rat(-22, 7));
  CHECK_THROWS_AS(Rat::parse("1/0"), PoleError);
  CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rat(1, 0), PoleError);
  Rat x(3);
  CHECK_THROWS_AS(x /= Rat(0), PoleError);
  CHECK_THROWS_AS(Coupling(Rat(0)), PoleError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 7) == Rat(1, 7));
  CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
  CHECK(sign_power(3) == Rat(-1));
  CHECK(sign_power(4) == Rat(1));
  Rat acc(1);
  acc.add_product(Rat(2, 3), Rat(3, 4));
  CHECK(acc == Rat(3, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  std::ostringstream os;
  os << Rat(5, 10);
  CHECK(os.str() == "1/2");
}

TEST_CASE("g, f and h at concrete points") {
  const Coupling one(Rat(1)), two(Rat(2));
  CHECK(g(Rat(3), Rat(1), two) == Rat(1));
  CHECK(g(Rat(5), Rat(2), one) == Rat(1, 3));
  CHECK(g(Rat(2), Rat(5), one) == Rat(-1, 3));
  CHECK_THROWS_AS(g(Rat(1), Rat(1), one), PoleError);
  CHECK(f(Rat(2), Rat(1), one) == Rat(2));
  CHECK(f(Rat(0), Rat(1), one) == Rat(0));
  CHECK(f(Rat(3) - two.value(), Rat(1, 2), two) == Rat(5));
  CHECK(f(Rat(3) - two.value(), Rat(1, 2), two) * f(Rat(1, 2), Rat(3), two) == Rat(1));
  CHECK_THROWS_AS(f(Rat(4), Rat(4), one), PoleError);
  CHECK(h(Rat(2), Rat(1), one) == Rat(2));
  CHECK(h(Rat(7, 3), Rat(7, 3), two) == Rat(1));
  CHECK(h(Rat(1), Rat(3), two) == Rat(0));
}

TEST_CASE("scalar function identities on a grid of rational points") {
  const Coupling c(Rat(3, 2));
  for (int p = -6; p <= 6; ++p) {
    for (int q = -6; q <= 6; ++q) {
      const Rat x(p, 2), y(q, 3);
      if (x == y) continue;
      CHECK(g(x, y, c) + g(y, x, c) == Rat(0));
      CHECK(f(x, y, c) - g(x, y, c) == Rat(1));
      if (x != y - c.value()) CHECK(h(x, y, c) * g(x, y - c.value(), c) == Rat(1));
      CHECK(h(x, y, c) * g(x, y, c) == f(x, y, c));
      if (x - c.value() != y) CHECK(f(x - c.value(), y, c) * f(y, x, c) == Rat(1));
    }
  }
}

TEST_CASE("set products") {
  const Coupling one(Rat(1));
  const VarSet a = make_varset({Rat(3), Rat(5)});
  const VarSet b = make_varset({Rat(1)});
  const VarSet none;
  CHECK(gg(a, b, one) == Rat(1, 8));
  CHECK(ff(none, b, one) == Rat(1));
  CHECK(hh(b, b, one) == Rat(1));
  const VarSet a2 = make_varset({Rat(-2, 3), Rat(7, 4)});
  for (Fn fn : {Fn::g, Fn::f, Fn::h}) {
    CHECK(set_product(fn, join(a, a2), b, one) == set_product(fn, a, b, one) * set_product(fn, a2, b, one));
  }
  CHECK_THROWS_AS(gg(a, make_varset({Rat(5)}), one), PoleError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "lpdo/ratfunc.hpp"
#include "lpdo/unipoly.hpp"

using namespace lpdo;

namespace {
const Poly X = Poly::variable(Var::x);
const Poly Y = Poly::variable(Var::y);
}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational("5/15").str() == "1/3");
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational::binomial(5, 2) == Rational(10));
  CHECK_THROWS_AS(Rational(1) / Rational(0), MathError);
  CHECK_THROWS_AS(Rational(0).inverse(), MathError);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("polynomial basics") {
  Poly p = X * X - Y * Y;
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(Var::x) == 2);
  CHECK(p.coeff(Exp2{2, 0}) == Rational(1));
  CHECK(p.coeff(Exp2{0, 2}) == Rational(-1));
  CHECK((p - p).is_zero());
  CHECK(p.leading_term().first == Exp2{2, 0});

  CHECK(X.derivative(Var::x) == Poly(1));
  CHECK((X * Y).derivative(Var::y) == X);
  CHECK((X.pow(3)).subst(Var::x, Rational(2)) == Poly(8));
  CHECK(X.shift(Var::x, Rational(1)) == X + Poly(1));
  CHECK((X.pow(2)).shift(Var::x, Rational(-1)) == X * X - Rational(2) * X + Poly(1));
}

TEST_CASE("polynomial exact division") {
  Poly a = (X + Y).pow(2) * (X - Y);
  CHECK(Poly::divexact(a, X + Y) == (X + Y) * (X - Y));
  CHECK_THROWS_AS(Poly::divexact(X, Y), MathError);
  CHECK_THROWS_AS(Poly::divexact(X, Poly()), MathError);
  CHECK(!Poly::try_divide(X * X + Poly(1), X + Poly(1)).has_value());
}

TEST_CASE("polynomial gcd worked examples") {
  CHECK(Poly::gcd((X + Y).pow(2) * X, (X + Y) * Y) == X + Y);
  CHECK(Poly::gcd(X * X - Y * Y, X - Y) == X - Y);
  CHECK(Poly::gcd(Poly(), X + Y) == X + Y);
  CHECK(Poly::gcd(Poly(4), Poly(6)) == Poly(1));
  CHECK(Poly::gcd(Rational(2) * X, Rational(4) * X) == X);
  CHECK(Poly::gcd(Poly(), Poly()).is_zero());
  // Content in y shows up in both arguments.
  CHECK(Poly::gcd(Y * (X + Poly(1)), Y * Y * (X - Poly(1))) == Y);
}

TEST_CASE("polynomial gcd properties") {
  testgen::Rng rng(20260822);
  for (int i = 0; i < 60; ++i) {
    Poly a = testgen::random_poly(rng), b = testgen::random_poly(rng);
    Poly g = Poly::gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK(Poly::try_divide(a, g).has_value());
    CHECK(Poly::try_divide(b, g).has_value());
    CHECK(g.leading_coeff().is_one());

    Poly c = testgen::random_poly(rng, 1, 2);
    if (!c.is_zero() && !a.is_zero() && !b.is_zero())
      CHECK(Poly::gcd(a * c, b * c) == (g * c).monic());
  }
}

TEST_CASE("ratfunc canonicalization worked examples") {
  CHECK(RatFunc::of(X * X - Poly(1), X - Poly(1)) == RatFunc(X + Poly(1)));
  CHECK(RatFunc::of(Poly(), X + Y).is_zero());
  CHECK(RatFunc::of(Poly(), X + Y).den() == Poly(1));
  CHECK(RatFunc::of(Rational(2) * (X + Y), Poly(4)) == RatFunc::of(X + Y, Poly(2)));
  CHECK(RatFunc::of(Rational(2) * (X + Y), Poly(4)).den().leading_coeff().is_one());
  CHECK_THROWS_AS(RatFunc::of(X, Poly()), MathError);
  // Denominator made monic: x/(2y) -> (1/2 x)/y.
  RatFunc r = RatFunc::of(X, Rational(2) * Y);
  CHECK(r.den() == Y);
  CHECK(r.num() == Rational(1, 2) * X);
}

TEST_CASE("ratfunc canonicalization is idempotent and sign-stable") {
  testgen::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Poly n = testgen::random_poly(rng);
    Poly d = testgen::random_poly(rng);
    if (d.is_zero()) d = X + Y;
    Poly t = testgen::random_poly(rng, 1, 2);
    if (t.is_zero()) t = Poly(1);
    RatFunc a = RatFunc::of(n, d);
    RatFunc b = RatFunc::of(n * t, d * t);
    CHECK(a == b);
    CHECK(RatFunc::of(a.num(), a.den()) == a);
    CHECK(a.den().leading_coeff().is_one());
    CHECK(Poly::gcd(a.num(), a.den()).is_constant());
  }
}

TEST_CASE("ratfunc field axioms on random values") {
  testgen::Rng rng(99);
  for (int i = 0; i < 80; ++i) {
    RatFunc a = testgen::random_ratfunc(rng);
    RatFunc b = testgen::random_ratfunc(rng);
    RatFunc c = testgen::random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFunc(1));
      CHECK((b / a) * a == b);
    }
  }
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), MathError);
}

TEST_CASE("derivation worked examples") {
  CHECK(RatFunc(X * X).derivative(Var::x) == RatFunc(Rational(2) * X));
  RatFunc inv = RatFunc::of(Poly(1), X + Y);
  CHECK(inv.derivative(Var::x) == RatFunc::of(Poly(-1), (X + Y).pow(2)));
  CHECK(RatFunc::of(X, Y).derivative(Var::y) == RatFunc::of(-X, Y * Y));
  CHECK(RatFunc(Rational(5)).derivative(Var::x).is_zero());
}

TEST_CASE("derivations commute and satisfy Leibniz") {
  testgen::Rng rng(123);
  for (int i = 0; i < 300; ++i) {
    RatFunc f = testgen::random_ratfunc(rng);
    RatFunc g = testgen::random_ratfunc(rng);
    CHECK(f.derivative(Var::x).derivative(Var::y) == f.derivative(Var::y).derivative(Var::x));
    CHECK((f * g).derivative(Var::x) == f.derivative(Var::x) * g + f * g.derivative(Var::x));
    CHECK((f + g).derivative(Var::y) == f.derivative(Var::y) + g.derivative(Var::y));
  }
}

TEST_CASE("univariate polynomials over Q") {
  using U = UniPoly<Rational>;
  U a(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  U b(std::vector<Rational>{Rational(-1), Rational(1)});               // t - 1
  auto [q, r] = U::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == U(std::vector<Rational>{Rational(1), Rational(1)}));
  CHECK(U::gcd(a, b) == b);
  CHECK(a.eval(Rational(3)) == Rational(8));
  CHECK(a.shifted(Rational(1)).eval(Rational(2)) == a.eval(Rational(3)));

  // (t-1)^2 (t+1) has squarefree decomposition [(t+1, 1), (t-1, 2)].
  U f = b * b * U(std::vector<Rational>{Rational(1), Rational(1)});
  auto parts = squarefree_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == U(std::vector<Rational>{Rational(1), Rational(1)}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == b);
  CHECK(parts[1].second == 2);
}

TEST_CASE("univariate division identity on random inputs") {
  using U = UniPoly<Rational>;
  testgen::Rng rng(555);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> ca, cb;
    int da = testgen::pick(rng, 0, 5), db = testgen::pick(rng, 0, 3);
    for (int k = 0; k <= da; ++k) ca.push_back(testgen::random_rational(rng));
    for (int k = 0; k <= db; ++k) cb.push_back(testgen::random_rational(rng));
    U a(ca), b(cb);
    if (b.is_zero()) continue;
    auto [q, r] = U::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("unipoly view round trip") {
  testgen::Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    Poly p = testgen::random_poly(rng, 3, 4);
    for (Var v : {Var::x, Var::y}) {
      RatFunc back = from_unipoly(to_unipoly(p, v), v);
      CHECK(back == RatFunc(p));
    }
  }
}

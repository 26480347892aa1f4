#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genops.hpp"
#include "lpdo/diffop.hpp"

using namespace lpdo;

namespace {
const Poly X = Poly::variable(Var::x);
const Poly Y = Poly::variable(Var::y);
const RatFunc rx{X}, ry{Y};

DiffOp DX = DiffOp::dx();
DiffOp DY = DiffOp::dy();
}  // namespace

TEST_CASE("composition worked examples") {
  // d_x o x = x d_x + 1
  CHECK(DX * DiffOp(rx) == DiffOp::monomial(Exp2{1, 0}, rx) + DiffOp(1));
  // d_y o 1/(x+y) = (1/(x+y)) d_y - 1/(x+y)^2
  RatFunc inv = RatFunc::of(Poly(1), X + Y);
  RatFunc inv2 = RatFunc::of(Poly(-1), (X + Y).pow(2));
  CHECK(DY * DiffOp(inv) == DiffOp::monomial(Exp2{0, 1}, inv) + DiffOp(inv2));
  // d_x d_y o y = y d_x d_y + d_x
  CHECK(DX * DY * DiffOp(ry) ==
        DiffOp::monomial(Exp2{1, 1}, ry) + DiffOp::monomial(Exp2{1, 0}, RatFunc(1)));
  // [d_x, x] = 1, [d_y, x] = 0
  DiffOp xop{rx};
  CHECK(DX * xop - xop * DX == DiffOp(1));
  CHECK(DY * xop - xop * DY == DiffOp());
}

TEST_CASE("ring axioms on random operators") {
  testgen::Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    DiffOp a = testgen::random_op(rng, 2, false);
    DiffOp b = testgen::random_op(rng, 2, false);
    DiffOp c = testgen::random_op(rng, 2, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK(a * DiffOp(1) == a);
    CHECK(DiffOp(1) * a == a);
  }
}

TEST_CASE("action is compatible with composition") {
  testgen::Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    DiffOp a = testgen::random_op(rng, 2, false);
    DiffOp b = testgen::random_op(rng, 2, false);
    RatFunc f = testgen::random_ratfunc(rng);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    CHECK((a + b).apply(f) == a.apply(f) + b.apply(f));
  }
}

TEST_CASE("apply worked examples") {
  CHECK(DX.apply(rx * rx) == RatFunc(Rational(2)) * rx);
  DiffOp p = DY * DY + DiffOp(rx) * DX;  // d_y^2 + x d_x
  RatFunc f = RatFunc::of(X * Y, Poly(1));
  CHECK(p.apply(f) == rx * ry);
  CHECK(DiffOp(5).apply(f) == RatFunc(5) * f);
}

TEST_CASE("order and zero operator") {
  CHECK_THROWS_AS(DiffOp().order(), MathError);
  CHECK(DiffOp(1).order() == 0);
  CHECK((DX * DY).order() == 2);
  DiffOp cancel = DX * DY - DX * DY;
  CHECK(cancel.is_zero());
}

TEST_CASE("symbol worked examples") {
  // symb(d_x d_y + x d_x) = v w
  DiffOp p = DX * DY + DiffOp(rx) * DX;
  BinaryForm s = op_symbol(p);
  CHECK(s.degree() == 2);
  CHECK(s.coeff(1) == RatFunc(1));
  CHECK(s.coeff(0).is_zero());
  CHECK(s.coeff(2).is_zero());
  // symb(d_y^2 + p1 d_x + ...) = w^2
  DiffOp q = DY * DY + DiffOp(rx) * DX + DiffOp(1);
  CHECK(op_symbol(q) == BinaryForm::w().pow(2));
  // symb(d_y^2 d_x + p0 d_x^2 + ...) = v w^2
  DiffOp r = DY * DY * DX + DiffOp(ry) * DX * DX + DiffOp(1);
  CHECK(op_symbol(r) == BinaryForm::v() * BinaryForm::w().pow(2));
  CHECK_THROWS_AS(op_symbol(DiffOp()), MathError);
}

TEST_CASE("symbol is multiplicative") {
  testgen::Rng rng(31337);
  for (int i = 0; i < 60; ++i) {
    DiffOp a = testgen::random_nonzero_op(rng, testgen::pick(rng, 0, 2));
    DiffOp b = testgen::random_nonzero_op(rng, testgen::pick(rng, 0, 2));
    CHECK(op_symbol(a * b) == op_symbol(a) * op_symbol(b));
  }
}

TEST_CASE("change of derivations worked examples") {
  // Shear d_y -> d_y + d_x on d_x d_y gives d_x^2 + d_x d_y.
  Mat2 shear{Rational(1), Rational(0), Rational(1), Rational(1)};
  CHECK(change_derivations(DX * DY, shear) == DX * DX + DX * DY);
  // Swap on d_y^2 + d_x gives d_x^2 + d_y.
  CHECK(change_derivations(DY * DY + DX, Mat2::swap()) == DX * DX + DY);
  // Identity fixes everything.
  testgen::Rng rng(5);
  DiffOp p = testgen::random_op(rng, 3, false);
  CHECK(change_derivations(p, Mat2::identity()) == p);
  CHECK_THROWS_AS(change_derivations(p, Mat2{Rational(1), Rational(2), Rational(2), Rational(4)}),
                  MathError);
}

TEST_CASE("change of derivations composes and acts on symbols") {
  testgen::Rng rng(6060);
  for (int i = 0; i < 40; ++i) {
    DiffOp p = testgen::random_op(rng, 2, false);
    Mat2 m = testgen::random_invertible_mat(rng);
    Mat2 n = testgen::random_invertible_mat(rng);
    CHECK(change_derivations(change_derivations(p, m), n) == change_derivations(p, m * n));
    if (!p.is_zero()) {
      CHECK(op_symbol(change_derivations(p, m)) == op_symbol(p).subst(m));
      // Composition with a scalar is unchanged; the operator acts the same
      // through the rewritten derivations on constants.
      CHECK(change_derivations(p, m).order() == p.order());
    }
  }
}

TEST_CASE("right division by monic linear operators") {
  RatFunc invy = RatFunc::of(Poly(1), Y);
  DiffOp ell = DY - DiffOp(invy);  // d_y - 1/y
  auto [q, r] = right_divide_linear(DY * DY, ell);
  CHECK(r.is_zero());
  CHECK(q == DY + DiffOp(invy));
  CHECK(q * ell == DY * DY);

  // Non-divisible case leaves a nonzero remainder satisfying P = Q L + R.
  DiffOp p = DY * DY + DiffOp(1);
  auto [q2, r2] = right_divide_linear(p, DY);
  CHECK(q2 * DY + DiffOp(r2) == p);
  CHECK(r2 == RatFunc(1));

  // d_x divisors work symmetrically.
  auto [q3, r3] = right_divide_linear(DX * DX + DiffOp(rx) * DX, DX);
  CHECK(q3 * DX + DiffOp(r3) == DX * DX + DiffOp(rx) * DX);
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(right_divide_linear(DX * DY, DY), MathError);
  CHECK_THROWS_AS(right_divide_linear(DY * DY, DY + DX), MathError);
  CHECK_THROWS_AS(right_divide_linear(DY * DY, DiffOp(rx) * DY), MathError);
}

TEST_CASE("right division identity on random univariate operators") {
  testgen::Rng rng(404);
  for (int i = 0; i < 80; ++i) {
    DiffOp p;
    int d = testgen::pick(rng, 0, 4);
    for (int k = 0; k <= d; ++k)
      if (testgen::pick(rng, 0, 1) == 0)
        p += DiffOp::monomial(Exp2{0, k}, testgen::random_coeff(rng));
    DiffOp ell = DiffOp::dy() + DiffOp(testgen::random_coeff(rng));
    auto [q, r] = right_divide_linear(p, ell);
    CHECK(q * ell + DiffOp(r) == p);
  }
}

TEST_CASE("riccati residual certifies first-order right factors") {
  RatFunc invy = RatFunc::of(Poly(1), Y);
  // (d_y + 1/y)(d_y - 1/y) = d_y^2, so g = 1/y is a right-factor witness.
  CHECK(riccati_residual(DY * DY, invy).is_zero());
  CHECK((DY + DiffOp(invy)) * (DY - DiffOp(invy)) == DY * DY);
  // g = 0 fails for d_y^2 + 1.
  CHECK(riccati_residual(DY * DY + DiffOp(1), RatFunc(0)) == RatFunc(1));
  CHECK_THROWS_AS(riccati_residual(DX * DY, ry), MathError);
}
